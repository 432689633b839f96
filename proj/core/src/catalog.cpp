#include "pdres/catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "pdres/algebra.hpp"
#include "pdres/polyring.hpp"

namespace pdres {

namespace {

ExpectationKind kind_from_string(const std::string& s) {
    if (s == "full") return ExpectationKind::Full;
    if (s == "zero_point") return ExpectationKind::ZeroPoint;
    if (s == "equations") return ExpectationKind::Equations;
    if (s == "codim3_cubics") return ExpectationKind::Codim3Cubics;
    if (s == "empty") return ExpectationKind::Empty;
    throw std::runtime_error("catalog: unknown expectation kind '" + s + "'");
}

std::vector<CatalogEntry> parse_catalog(const char* text) {
    nlohmann::json root;
    try {
        root = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(std::string("catalog: corrupt data file: ") + e.what());
    }
    std::vector<CatalogEntry> entries;
    for (const auto& je : root.at("entries")) {
        CatalogEntry e;
        e.id = je.at("id").get<std::string>();
        e.n = je.at("n").get<std::size_t>();
        e.expr = je.at("expr").get<std::string>();
        for (const auto& jx : je.at("expected")) {
            Expectation x;
            for (const auto& d : jx.at("depths")) x.depths.push_back(d.get<int>());
            x.kind = kind_from_string(jx.at("kind").get<std::string>());
            if (jx.contains("components"))
                for (const auto& comp : jx.at("components"))
                    x.components.push_back(comp.get<std::vector<std::string>>());
            e.expected.push_back(std::move(x));
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

void validate_catalog(const std::vector<CatalogEntry>& entries) {
    if (entries.size() != 27)
        throw std::runtime_error("catalog: expected 27 entries, found " +
                                 std::to_string(entries.size()));
    const Field rat = Field::rationals();
    for (const CatalogEntry& e : entries) {
        const Trivector mu = e.form(rat);
        if (mu.form_rank().first != e.n)
            throw std::runtime_error("catalog: form " + e.id +
                                     " is not irreducible of the stated rank");
        for (const Expectation& x : e.expected) {
            if (x.depths.empty())
                throw std::runtime_error("catalog: entry " + e.id + " has an empty depth list");
            if (x.kind == ExpectationKind::Equations && x.components.empty())
                throw std::runtime_error("catalog: entry " + e.id +
                                         " lists equations without components");
            for (const auto& comp : x.components)
                for (const std::string& s : comp) Polynomial::parse(rat, e.n, s);
        }
    }
}

PointLocus origin_locus(const Field& gf, std::size_t n) {
    PointLocus out(gf, n);
    out.set(0);
    return out;
}

std::string point_str(const std::vector<std::uint32_t>& digits) {
    std::string out = "(";
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(digits[i]);
    }
    return out + ")";
}

}  // namespace

Trivector CatalogEntry::form(const Field& f) const { return Trivector::parse(f, n, expr); }

const Expectation* CatalogEntry::expectation_at(int k) const {
    for (const Expectation& e : expected)
        for (int d : e.depths)
            if (d == k) return &e;
    return nullptr;
}

const std::vector<CatalogEntry>& load_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> es = parse_catalog(kCatalogJsonText);
        validate_catalog(es);
        return es;
    }();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const CatalogEntry& e : load_catalog())
        if (e.id == id) return e;
    throw std::out_of_range("catalog: no entry '" + id + "'");
}

PointLocus expected_points(const CatalogEntry& entry, int k, const Field& gf,
                           std::uint64_t budget) {
    if (gf.characteristic() == 0)
        throw std::invalid_argument("catalog: finite field required");
    const std::size_t n = entry.n;
    if (k <= 0) return PointLocus::full(gf, n);

    const Expectation* exp = entry.expectation_at(k);
    if (exp == nullptr) {
        if (k > static_cast<int>(n)) return PointLocus(gf, n);
        if (k == static_cast<int>(n)) return origin_locus(gf, n);
        // Parity pairs depths (2j, 2j+1) for even n and (2j-1, 2j) for odd n.
        const bool paired_down = (n % 2 == 0) ? (k % 2 == 1) : (k % 2 == 0);
        if (paired_down && k == 1) return PointLocus::full(gf, n);
        if (paired_down) exp = entry.expectation_at(k - 1);
        if (exp == nullptr)
            throw std::domain_error("catalog: no expectation tabulated for depth " +
                                    std::to_string(k));
    }

    switch (exp->kind) {
        case ExpectationKind::Full:
            return PointLocus::full(gf, n);
        case ExpectationKind::ZeroPoint:
            return origin_locus(gf, n);
        case ExpectationKind::Empty:
            return PointLocus(gf, n);
        case ExpectationKind::Codim3Cubics:
            throw std::domain_error("no closed-form expectation");
        case ExpectationKind::Equations:
            break;
    }
    PointLocus out(gf, n);
    for (const auto& comp : exp->components) {
        std::vector<Polynomial> gens;
        gens.reserve(comp.size());
        for (const std::string& s : comp) gens.push_back(Polynomial::parse(gf, n, s));
        out = out.unioned(locus_of_ideal(gens, gf, n, budget));
    }
    return out;
}

EntryReport verify_entry(const CatalogEntry& entry, const Field& gf, std::uint64_t budget,
                         unsigned workers) {
    if (gf.characteristic() == 0)
        throw std::invalid_argument("catalog: finite field required");
    EntryReport rep;
    rep.id = entry.id;
    rep.field = gf;
    rep.pass = true;

    const Trivector mu = entry.form(gf);
    const GradedAlgebra A = pd3_from_trivector(mu);
    const ResonanceProfile P = resonance_points(A, budget, workers);
    rep.depth2_count = P.locus(1, 2).point_count();

    std::vector<std::pair<int, const Expectation*>> rows;
    for (const Expectation& e : entry.expected)
        for (int d : e.depths) rows.emplace_back(d, &e);
    std::sort(rows.begin(), rows.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    for (const auto& [k, exp] : rows) {
        DepthResult dr;
        dr.k = k;
        const PointLocus R = P.locus(1, k);
        dr.sweep_count = R.point_count();
        if (exp->kind == ExpectationKind::Codim3Cubics) {
            dr.closed_form = false;
            dr.match = R.test(0) && dr.sweep_count > 1 && dr.sweep_count < R.space_size();
            if (!dr.match) {
                rep.pass = false;
                if (rep.detail.empty())
                    rep.detail = "depth " + std::to_string(k) +
                                 ": locus is not a proper superset of the origin";
            }
        } else {
            const PointLocus E = expected_points(entry, k, gf, budget);
            dr.expected_count = E.point_count();
            const auto w = R.first_difference(E);
            dr.match = !w.has_value();
            if (w) {
                rep.pass = false;
                if (!rep.counterexample) {
                    rep.counterexample = R.point_at(*w);
                    rep.detail = "depth " + std::to_string(k) +
                                 ": sweep differs from the table at " + point_str(R.point_at(*w));
                }
            }
        }
        rep.depths.push_back(dr);
    }
    if (rep.pass) rep.detail = "all tabulated depths match the table";
    return rep;
}

}  // namespace pdres
