// pdres: resonance loci of Poincare duality algebras from the command line.
//
// Verbs: resonance, pfaffian, turaev, nullity, generic, connsum, tensor,
// wedge, verify, catalog.  Output is JSON on stdout (--table renders a plain
// text table instead).  Exit codes: 0 pass, 1 mathematical failure, 2 usage,
// 3 budget refusal.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdres/algebra.hpp"
#include "pdres/budget.hpp"
#include "pdres/catalog.hpp"
#include "pdres/claims.hpp"
#include "pdres/forms.hpp"
#include "pdres/resonance.hpp"

namespace {

using Json = nlohmann::ordered_json;

std::string field_str(const pdres::Field& f) {
    if (f.characteristic() == 0) return "rational";
    return "p" + std::to_string(f.characteristic());
}

std::vector<pdres::Field> parse_fields(const std::string& spec) {
    std::vector<pdres::Field> out;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) out.push_back(pdres::Field::parse(token));
    if (out.empty()) throw std::invalid_argument("field: empty field spec");
    return out;
}

pdres::Field single_field(const std::string& spec) {
    const std::vector<pdres::Field> fields = parse_fields(spec);
    if (fields.size() != 1)
        throw CLI::ValidationError(
            "--field", "multiple primes are only accepted by verify and catalog verify");
    return fields[0];
}

/// One input source: --form EXPR --n N | --algebra FILE | --catalog ID.
struct InputSpec {
    std::string form;
    int n = 0;
    std::string algebra_path;
    std::string catalog_id;
    CLI::Option* form_opt = nullptr;
    CLI::Option* n_opt = nullptr;
    CLI::Option* alg_opt = nullptr;
    CLI::Option* cat_opt = nullptr;
};

void add_input(CLI::App* cmd, InputSpec& in, const std::string& sfx = "") {
    in.form_opt = cmd->add_option("--form" + sfx, in.form,
                                  "alternating form expression, e.g. \"125+345\"");
    in.n_opt = cmd->add_option("--n" + sfx, in.n, "number of degree-one generators");
    in.alg_opt = cmd->add_option("--algebra" + sfx, in.algebra_path,
                                 "graded algebra description file (JSON)");
    in.cat_opt = cmd->add_option("--catalog" + sfx, in.catalog_id, "built-in catalog entry id");
}

struct CommonOpts {
    std::string field_spec;
    std::uint64_t budget = pdres::kDefaultBudget;
    unsigned workers = 1;
    bool table = false;
    CLI::Option* field_opt = nullptr;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    o.field_opt =
        cmd->add_option("--field", o.field_spec, "coefficient field: rational or pP");
    cmd->add_option("--budget", o.budget, "maximum points per sweep")->capture_default_str();
    cmd->add_option("--workers", o.workers, "worker threads for sweeps")
        ->capture_default_str();
    cmd->add_flag("--table", o.table, "plain text table instead of JSON");
}

std::optional<pdres::Field> optional_field(const CommonOpts& o) {
    if (o.field_opt->count() == 0) return std::nullopt;
    return single_field(o.field_spec);
}

pdres::GradedAlgebra load_algebra(const InputSpec& in, const std::optional<pdres::Field>& f) {
    const int sources = (in.form_opt->count() > 0 ? 1 : 0) +
                        (in.alg_opt->count() > 0 ? 1 : 0) + (in.cat_opt->count() > 0 ? 1 : 0);
    if (sources != 1)
        throw CLI::ValidationError(
            "input", "exactly one of --form/--algebra/--catalog is required per input");
    if (in.form_opt->count() > 0) {
        if (in.n_opt->count() == 0)
            throw CLI::ValidationError("input", "--form needs --n");
        if (in.n < 0) throw CLI::ValidationError("input", "--n must be nonnegative");
        if (!f) throw CLI::ValidationError("input", "--form needs --field");
        return pdres::pd3_from_trivector(
            pdres::Trivector::parse(*f, static_cast<std::size_t>(in.n), in.form));
    }
    if (in.cat_opt->count() > 0) {
        if (!f) throw CLI::ValidationError("input", "--catalog needs --field");
        return pdres::pd3_from_trivector(pdres::catalog_entry(in.catalog_id).form(*f));
    }
    std::ifstream is(in.algebra_path);
    if (!is) throw CLI::ValidationError("input", "cannot read " + in.algebra_path);
    std::stringstream ss;
    ss << is.rdbuf();
    pdres::GradedAlgebra A = pdres::algebra_from_json_text(ss.str());
    if (f && !(A.field() == *f)) return pdres::change_field(A, *f);
    return A;
}

pdres::Field required_finite(const CommonOpts& o, const pdres::GradedAlgebra& A,
                             const char* verb) {
    const pdres::Field f = A.field();
    if (f.characteristic() == 0)
        throw CLI::ValidationError(verb, "a finite field is required (use --field pP)");
    return f;
}

Json points_json(const std::vector<std::vector<std::uint32_t>>& pts) {
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back(p);
    return arr;
}

std::string point_str(const std::vector<std::uint32_t>& digits) {
    std::string out = "(";
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(digits[i]);
    }
    return out + ")";
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// --------------------------------------------------------------------- verbs

int run_resonance(const InputSpec& in, const CommonOpts& o, const std::optional<int>& depth) {
    const pdres::GradedAlgebra A = load_algebra(in, optional_field(o));
    const pdres::Field gf = required_finite(o, A, "resonance");
    const pdres::ResonanceProfile P = pdres::resonance_points(A, o.budget, o.workers);

    Json out;
    out["field"] = field_str(gf);
    out["n"] = P.n;
    out["dims"] = P.dims;
    Json loci = Json::array();
    for (std::uint32_t i = 0; i < P.loci.size(); ++i) {
        for (std::uint32_t k = 1; k <= P.loci[i].size(); ++k) {
            if (depth && static_cast<int>(k) != *depth) continue;
            const pdres::PointLocus& L = P.locus_ref(i, k);
            Json row;
            row["i"] = i;
            row["k"] = k;
            row["count"] = L.point_count();
            row["sample_points"] = points_json(L.sample_points(5));
            loci.push_back(std::move(row));
        }
    }
    out["loci"] = std::move(loci);
    out["checks"] = Json::array();

    if (o.table) {
        std::cout << "resonance loci over " << field_str(gf) << ", n = " << P.n << "\n";
        for (const auto& row : out["loci"]) {
            std::cout << "  R^" << row["i"] << "_" << row["k"] << ": " << row["count"]
                      << " points";
            if (!row["sample_points"].empty())
                std::cout << "  e.g. "
                          << point_str(
                                 row["sample_points"][0].get<std::vector<std::uint32_t>>());
            std::cout << "\n";
        }
        return 0;
    }
    emit(out);
    return 0;
}

int run_pfaffian(const InputSpec& in, const CommonOpts& o, const std::optional<int>& depth,
                 const std::optional<int>& size) {
    if (depth.has_value() == size.has_value())
        throw CLI::ValidationError("pfaffian", "exactly one of --depth/--size is required");
    const pdres::GradedAlgebra A = load_algebra(in, optional_field(o));
    const pdres::Trivector mu = pdres::trivector_of(A);
    const std::vector<pdres::Polynomial> gens =
        depth ? pdres::pfaffian_loci(mu, *depth)
              : mu.generic_contraction().principal_pfaffian_ideal(*size);

    Json row;
    row["i"] = 1;
    if (depth) row["k"] = *depth;
    if (size) row["size"] = *size;
    if (mu.field().characteristic() != 0) {
        const pdres::PointLocus L =
            pdres::locus_of_ideal(gens, mu.field(), mu.n(), o.budget);
        row["count"] = L.point_count();
        row["sample_points"] = points_json(L.sample_points(5));
    }
    Json jgens = Json::array();
    for (const pdres::Polynomial& g : gens) jgens.push_back(g.str());
    row["ideal_generators"] = std::move(jgens);

    Json out;
    out["field"] = field_str(mu.field());
    out["n"] = mu.n();
    out["loci"] = Json::array({row});
    out["checks"] = Json::array();

    if (o.table) {
        std::cout << "pfaffian ideal over " << field_str(mu.field()) << ", n = " << mu.n()
                  << (depth ? ", depth " + std::to_string(*depth)
                            : ", size " + std::to_string(*size))
                  << "\n";
        for (const auto& g : row["ideal_generators"])
            std::cout << "  " << g.get<std::string>() << "\n";
        if (row.contains("count")) std::cout << "  locus: " << row["count"] << " points\n";
        return 0;
    }
    emit(out);
    return 0;
}

int run_turaev(const InputSpec& in, const CommonOpts& o) {
    const pdres::GradedAlgebra A = load_algebra(in, optional_field(o));
    const pdres::Trivector mu = pdres::trivector_of(A);
    const pdres::TuraevResult r = pdres::turaev_det_pf(mu);

    Json out;
    out["field"] = field_str(mu.field());
    out["n"] = mu.n();
    out["det"] = r.det.str();
    out["pf"] = r.pf ? Json(r.pf->str()) : Json(nullptr);
    out["pf_degree"] = r.pf ? Json(r.pf->degree()) : Json(nullptr);
    out["checks"] = Json::array({Json{{"claim", "turaev"}, {"status", "pass"}}});

    if (o.table) {
        std::cout << "turaev invariants over " << field_str(mu.field()) << ", n = " << mu.n()
                  << "\n  det = " << r.det.str() << "\n";
        if (r.pf) std::cout << "  pf  = " << r.pf->str() << "\n";
        return 0;
    }
    emit(out);
    return 0;
}

int run_nullity(const InputSpec& in, const CommonOpts& o) {
    const pdres::GradedAlgebra A = load_algebra(in, optional_field(o));
    const pdres::Trivector mu = pdres::trivector_of(A);
    required_finite(o, A, "nullity");
    const pdres::NullityResult r = pdres::nullity(mu, mu.n(), o.budget);

    Json witness = Json::array();
    for (const auto& vec : r.witness) {
        std::vector<std::uint32_t> digits;
        for (const pdres::Scalar& s : vec) digits.push_back(s.residue());
        witness.push_back(digits);
    }
    Json out;
    out["field"] = field_str(mu.field());
    out["n"] = mu.n();
    out["nullity"] = r.nu;
    out["exact"] = r.exact;
    out["nodes_visited"] = r.nodes_visited;
    out["witness"] = std::move(witness);
    out["checks"] = Json::array();

    if (o.table) {
        std::cout << "nullity over " << field_str(mu.field()) << ", n = " << mu.n() << ": "
                  << r.nu << (r.exact ? "" : " (lower bound, budget exhausted)") << "\n";
        for (const auto& row : out["witness"])
            std::cout << "  " << point_str(row.get<std::vector<std::uint32_t>>()) << "\n";
        return 0;
    }
    emit(out);
    return 0;
}

int run_generic(const InputSpec& in, const CommonOpts& o) {
    const pdres::GradedAlgebra A = load_algebra(in, optional_field(o));
    const pdres::Trivector mu = pdres::trivector_of(A);

    Json out;
    out["field"] = field_str(mu.field());
    out["n"] = mu.n();
    if (mu.n() % 2 == 1) {
        const pdres::BpGenericity bp = pdres::is_bp_generic(mu);
        out["bp_generic"] = bp.generic;
        out["pf"] = bp.pf.str();
        out["pf_degree"] = bp.pf.degree();
        if (bp.witness) {
            std::vector<std::uint32_t> digits;
            for (const pdres::Scalar& s : *bp.witness) digits.push_back(s.residue());
            out["bp_witness"] = digits;
        }
    } else {
        out["bp_generic"] = nullptr;
        out["note"] = "pfaffian genericity is defined for odd n only";
    }
    if (mu.field().characteristic() != 0) {
        const pdres::DfmrResult d = pdres::is_dfmr_generic(mu, mu.field(), o.budget);
        out["dfmr_generic"] = d.generic;
        if (d.counterexample) {
            std::vector<std::uint32_t> digits;
            for (const pdres::Scalar& s : *d.counterexample) digits.push_back(s.residue());
            out["dfmr_counterexample"] = digits;
        }
    }
    out["checks"] = Json::array();

    if (o.table) {
        std::cout << "genericity over " << field_str(mu.field()) << ", n = " << mu.n() << "\n";
        if (out["bp_generic"].is_boolean())
            std::cout << "  pfaffian-generic: " << (out["bp_generic"].get<bool>() ? "yes" : "no")
                      << "  (pf = " << out["pf"].get<std::string>() << ")\n";
        if (out.contains("dfmr_generic"))
            std::cout << "  contraction-rank >= 4 everywhere: "
                      << (out["dfmr_generic"].get<bool>() ? "yes" : "no") << "\n";
        return 0;
    }
    emit(out);
    return 0;
}

int run_binary_op(const InputSpec& in1, const InputSpec& in2, const CommonOpts& o,
                  const std::string& verb) {
    const std::optional<pdres::Field> f = optional_field(o);
    const pdres::GradedAlgebra A = load_algebra(in1, f);
    const pdres::GradedAlgebra B = load_algebra(in2, f);
    pdres::GradedAlgebra X = verb == "connsum"  ? pdres::connected_sum(A, B)
                             : verb == "tensor" ? pdres::tensor_product(A, B)
                                                : pdres::wedge_sum(A, B);
    if (o.table) {
        std::cout << verb << " over " << field_str(X.field()) << ", degrees 0.."
                  << X.top_degree() << ", dims";
        for (std::uint32_t i = 0; i <= X.top_degree(); ++i) std::cout << " " << X.dim(i);
        std::cout << "\n";
        return 0;
    }
    std::cout << pdres::algebra_to_json_text(X);
    return 0;
}

bool is_two_input_claim(const std::string& claim) {
    return claim == "connsum" || claim == "tensor" || claim == "wedge" ||
           claim == "functoriality";
}

int run_verify(const InputSpec& in1, const InputSpec& in2, const CommonOpts& o,
               const std::string& claim) {
    if (o.field_opt->count() == 0)
        throw CLI::ValidationError("verify", "--field is required");
    const std::vector<pdres::Field> fields = parse_fields(o.field_spec);
    const bool two = is_two_input_claim(claim);
    if (!two && in2.form_opt->count() + in2.alg_opt->count() + in2.cat_opt->count() > 0)
        throw CLI::ValidationError("verify", "claim '" + claim + "' takes a single input");

    Json checks = Json::array();
    std::size_t n = 0;
    unsigned passes = 0, fails = 0;
    for (const pdres::Field& f : fields) {
        const pdres::GradedAlgebra A = load_algebra(in1, f);
        n = A.dim(1);
        pdres::ClaimReport rep;
        if (!two) {
            rep = pdres::claim_by_name(claim, A, o.budget, o.workers);
        } else {
            const pdres::GradedAlgebra B = load_algebra(in2, f);
            if (claim == "connsum")
                rep = pdres::claim_connsum(A, B, o.budget);
            else if (claim == "tensor")
                rep = pdres::claim_tensor(A, B, o.budget);
            else if (claim == "wedge")
                rep = pdres::claim_wedge(A, B, o.budget);
            else
                rep = pdres::claim_functoriality(pdres::connected_sum_inclusion(A, B),
                                                 o.budget);
        }
        (rep.pass ? passes : fails)++;
        Json row;
        row["claim"] = rep.claim;
        row["field"] = field_str(f);
        row["status"] = rep.pass ? "pass" : "fail";
        row["detail"] = rep.detail;
        if (rep.counterexample) row["counterexample"] = *rep.counterexample;
        checks.push_back(std::move(row));
    }
    int code = 0;
    if (fails > 0 && passes == 0) code = 1;
    if (fails > 0 && passes > 0) {
        Json row;
        row["claim"] = claim;
        row["field"] = "merged";
        row["status"] = "bad_prime";
        row["detail"] = "results differ across primes; treating the failing prime as bad";
        checks.push_back(std::move(row));
    }

    Json out;
    out["field"] = o.field_spec;
    out["n"] = n;
    out["loci"] = Json::array();
    out["checks"] = std::move(checks);

    if (o.table) {
        for (const auto& row : out["checks"]) {
            std::cout << row["claim"].get<std::string>() << " @ "
                      << row["field"].get<std::string>() << ": "
                      << row["status"].get<std::string>();
            if (row.contains("detail")) std::cout << "  (" << row["detail"].get<std::string>() << ")";
            if (row.contains("counterexample"))
                std::cout << "  at "
                          << point_str(row["counterexample"].get<std::vector<std::uint32_t>>());
            std::cout << "\n";
        }
        return code;
    }
    emit(out);
    return code;
}

int run_catalog_list(bool table) {
    Json entries = Json::array();
    for (const pdres::CatalogEntry& e : pdres::load_catalog()) {
        Json row;
        row["id"] = e.id;
        row["n"] = e.n;
        row["expr"] = e.expr;
        std::vector<int> depths;
        for (const pdres::Expectation& x : e.expected)
            depths.insert(depths.end(), x.depths.begin(), x.depths.end());
        std::sort(depths.begin(), depths.end());
        row["tabulated_depths"] = depths;
        entries.push_back(std::move(row));
    }
    if (table) {
        for (const auto& row : entries)
            std::cout << row["id"].get<std::string>() << "  n=" << row["n"] << "  "
                      << row["expr"].get<std::string>() << "\n";
        return 0;
    }
    emit(Json{{"entries", std::move(entries)}});
    return 0;
}

int run_catalog_verify(const CommonOpts& o, bool all, const std::string& id) {
    if (o.field_opt->count() == 0)
        throw CLI::ValidationError("catalog verify", "--field is required");
    if (all == !id.empty())
        throw CLI::ValidationError("catalog verify", "choose --all or --catalog ID");
    const std::vector<pdres::Field> fields = parse_fields(o.field_spec);
    for (const pdres::Field& f : fields)
        if (f.characteristic() == 0)
            throw CLI::ValidationError("catalog verify", "finite fields only");

    std::vector<const pdres::CatalogEntry*> entries;
    if (all)
        for (const pdres::CatalogEntry& e : pdres::load_catalog()) entries.push_back(&e);
    else
        entries.push_back(&pdres::catalog_entry(id));

    Json rows = Json::array();
    bool pass = true;
    for (const pdres::CatalogEntry* e : entries) {
        for (const pdres::Field& f : fields) {
            const pdres::EntryReport rep = pdres::verify_entry(*e, f, o.budget, o.workers);
            pass = pass && rep.pass;
            Json row;
            row["id"] = rep.id;
            row["field"] = field_str(f);
            row["pass"] = rep.pass;
            Json depths = Json::array();
            for (const pdres::DepthResult& d : rep.depths) {
                Json dr;
                dr["k"] = d.k;
                dr["closed_form"] = d.closed_form;
                dr["match"] = d.match;
                dr["count"] = d.sweep_count;
                if (d.closed_form) dr["expected_count"] = d.expected_count;
                depths.push_back(std::move(dr));
            }
            row["depths"] = std::move(depths);
            row["detail"] = rep.detail;
            if (rep.counterexample) row["counterexample"] = *rep.counterexample;
            rows.push_back(std::move(row));

            if (o.table) {
                std::cout << rep.id << "  n=" << e->n << "  " << field_str(f) << "  "
                          << (rep.pass ? "ok" : "FAIL");
                for (const pdres::DepthResult& d : rep.depths) {
                    std::cout << "  R_" << d.k << "=" << d.sweep_count;
                    if (!d.match) std::cout << "(!)";
                }
                std::cout << "\n";
            }
        }
    }
    if (!o.table) emit(Json{{"field", o.field_spec}, {"entries", std::move(rows)}});
    return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"resonance loci of Poincare duality algebras"};
    app.require_subcommand(1);
    int exit_code = 0;

    // resonance
    auto* c_res = app.add_subcommand("resonance", "sweep all resonance loci over a finite field");
    static InputSpec res_in;
    static CommonOpts res_o;
    static int res_depth = -1;
    add_input(c_res, res_in);
    add_common(c_res, res_o);
    auto* res_depth_opt = c_res->add_option("--depth", res_depth, "restrict output to one depth");
    c_res->callback([&, res_depth_opt] {
        exit_code = run_resonance(
            res_in, res_o,
            res_depth_opt->count() ? std::optional<int>(res_depth) : std::nullopt);
    });

    // pfaffian
    auto* c_pf = app.add_subcommand("pfaffian", "pfaffian ideal of the contraction matrix");
    static InputSpec pf_in;
    static CommonOpts pf_o;
    static int pf_depth = 0, pf_size = 0;
    add_input(c_pf, pf_in);
    add_common(c_pf, pf_o);
    auto* pf_depth_opt = c_pf->add_option("--depth", pf_depth, "resonance depth (ideal of that locus)");
    auto* pf_size_opt = c_pf->add_option("--size", pf_size, "pfaffian size (even)");
    c_pf->callback([&, pf_depth_opt, pf_size_opt] {
        exit_code = run_pfaffian(
            pf_in, pf_o, pf_depth_opt->count() ? std::optional<int>(pf_depth) : std::nullopt,
            pf_size_opt->count() ? std::optional<int>(pf_size) : std::nullopt);
    });

    // turaev
    auto* c_tu = app.add_subcommand("turaev", "reduced determinant and pfaffian of a form");
    static InputSpec tu_in;
    static CommonOpts tu_o;
    add_input(c_tu, tu_in);
    add_common(c_tu, tu_o);
    c_tu->callback([&] { exit_code = run_turaev(tu_in, tu_o); });

    // nullity
    auto* c_nu = app.add_subcommand("nullity", "maximal 2-singular subspace dimension");
    static InputSpec nu_in;
    static CommonOpts nu_o;
    add_input(c_nu, nu_in);
    add_common(c_nu, nu_o);
    c_nu->callback([&] { exit_code = run_nullity(nu_in, nu_o); });

    // generic
    auto* c_ge = app.add_subcommand("generic", "genericity tests for a form");
    static InputSpec ge_in;
    static CommonOpts ge_o;
    add_input(c_ge, ge_in);
    add_common(c_ge, ge_o);
    c_ge->callback([&] { exit_code = run_generic(ge_in, ge_o); });

    // connsum / tensor / wedge
    static InputSpec bin_in1[3], bin_in2[3];
    static CommonOpts bin_o[3];
    const char* bin_verbs[3] = {"connsum", "tensor", "wedge"};
    const char* bin_desc[3] = {"connected sum of two oriented algebras",
                               "tensor product of two algebras",
                               "wedge sum of two oriented algebras"};
    for (int v = 0; v < 3; ++v) {
        auto* c = app.add_subcommand(bin_verbs[v], bin_desc[v]);
        add_input(c, bin_in1[v]);
        add_input(c, bin_in2[v], "2");
        add_common(c, bin_o[v]);
        std::string verb = bin_verbs[v];
        c->callback([&, v, verb] {
            exit_code = run_binary_op(bin_in1[v], bin_in2[v], bin_o[v], verb);
        });
    }

    // verify
    auto* c_ve = app.add_subcommand("verify", "check a structural law on the given input(s)");
    static InputSpec ve_in1, ve_in2;
    static CommonOpts ve_o;
    static std::string ve_claim;
    add_input(c_ve, ve_in1);
    add_input(c_ve, ve_in2, "2");
    add_common(c_ve, ve_o);
    {
        std::string names;
        for (const std::string& s : pdres::claim_names()) names += (names.empty() ? "" : ", ") + s;
        c_ve->add_option("--claim", ve_claim, "one of: " + names)->required();
    }
    c_ve->callback([&] { exit_code = run_verify(ve_in1, ve_in2, ve_o, ve_claim); });

    // catalog
    auto* c_cat = app.add_subcommand("catalog", "built-in catalog of forms and expected loci");
    c_cat->require_subcommand(1);
    auto* c_list = c_cat->add_subcommand("list", "list catalog entries");
    static bool list_table = false;
    c_list->add_flag("--table", list_table, "plain text table instead of JSON");
    c_list->callback([&] { exit_code = run_catalog_list(list_table); });

    auto* c_cv = c_cat->add_subcommand("verify", "sweep entries and compare with the tables");
    static CommonOpts cv_o;
    static bool cv_all = false;
    static std::string cv_id;
    add_common(c_cv, cv_o);
    c_cv->add_flag("--all", cv_all, "verify every entry");
    c_cv->add_option("--catalog", cv_id, "verify a single entry");
    c_cv->callback([&] { exit_code = run_catalog_verify(cv_o, cv_all, cv_id); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const pdres::BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
