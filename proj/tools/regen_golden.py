#!/usr/bin/env python3
"""Regenerates tests/golden/frozen.hpp from the pdres command line tool.

Runs the sweeps, turaev extractions, and nullity searches through the built
binary and rewrites the frozen header.  Slow (it redoes every GF(7) n = 8
sweep); only needed when the catalog or the frozen scope changes.
"""

import argparse
import json
import pathlib
import subprocess

GF3_IDS = ["I", "II", "III", "IV", "V_a", "V_b"]
TURAEV_IDS = ["II", "III", "IV", "V_a", "V_b", "VI", "VII", "VIII_a", "VIII_b",
              "IX_a", "IX_b", "X_a", "X_b", "XI"]
TURAEV_FORMS = [("125+345", 5), ("127+347+567", 7)]
NULLITY_IDS = ["II", "III", "IV", "V_a", "V_b", "VI", "VII", "VIII_a", "VIII_b",
               "IX_a", "IX_b", "X_a", "X_b"]

HEADER = '''#pragma once
// Frozen reference data for the test suite: point counts of the depth-k
// degree-one loci at every tabulated depth, reduced pfaffians, and
// nullity values.
// DO NOT EDIT - regenerate with:
//   python3 tools/regen_golden.py --bin <build-dir>/tools/pdres

#include <cstdint>
#include <vector>

namespace golden {

/// |R^1_k| over GF(p) at the tabulated depths of one catalog entry,
/// k ascending.
struct SweepRow {
    const char* id;
    std::uint32_t p;
    std::vector<std::uint64_t> counts;
};

inline const std::vector<SweepRow>& sweep_rows() {
    static const std::vector<SweepRow> rows = {
%(sweep)s    };
    return rows;
}

/// Reduced pfaffian over the rationals.  `pf` is null for even n, where the
/// reduced determinant must vanish identically; for odd n the reduced
/// determinant is pf squared.  `expr` is used when `id` is null.
struct TuraevRow {
    const char* id;
    const char* expr;
    std::uint32_t n;
    const char* pf;
};

inline const std::vector<TuraevRow>& turaev_rows() {
    static const std::vector<TuraevRow> rows = {
%(turaev)s    };
    return rows;
}

/// Nullity (maximal dimension of a 2-singular subspace) over GF(p).
struct NullityRow {
    const char* id;
    std::uint32_t p;
    std::uint32_t nu;
};

inline const std::vector<NullityRow>& nullity_rows() {
    static const std::vector<NullityRow> rows = {
%(nullity)s    };
    return rows;
}

}  // namespace golden
'''


def run_json(binary, *args):
    proc = subprocess.run([binary, *args], check=True, capture_output=True, text=True)
    return json.loads(proc.stdout)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bin", required=True, help="path to the pdres binary")
    parser.add_argument(
        "--out",
        default=str(pathlib.Path(__file__).resolve().parent.parent
                    / "tests" / "golden" / "frozen.hpp"),
        help="header to rewrite")
    args = parser.parse_args()

    listing = run_json(args.bin, "catalog", "list")
    depths_of = {e["id"]: e["tabulated_depths"] for e in listing["entries"]}
    all_ids = [e["id"] for e in listing["entries"]]

    sweep = []
    for p, ids in [(3, GF3_IDS), (5, all_ids), (7, all_ids)]:
        for entry_id in ids:
            prof = run_json(args.bin, "resonance", "--catalog", entry_id,
                            "--field", "p%d" % p)
            counts = {(row["i"], row["k"]): row["count"] for row in prof["loci"]}
            row = [counts.get((1, k), 0) for k in depths_of[entry_id]]
            sweep.append('        {"%s", %d, {%s}},\n'
                         % (entry_id, p, ", ".join(str(c) for c in row)))

    turaev = []
    for entry_id in TURAEV_IDS:
        rec = run_json(args.bin, "turaev", "--catalog", entry_id, "--field", "rational")
        pf = "nullptr" if rec["pf"] is None else '"%s"' % rec["pf"]
        if rec["pf"] is None and rec["det"] != "0":
            raise SystemExit("%s: even n but nonzero reduced determinant" % entry_id)
        turaev.append('        {"%s", nullptr, %d, %s},\n' % (entry_id, rec["n"], pf))
    for expr, n in TURAEV_FORMS:
        rec = run_json(args.bin, "turaev", "--form", expr, "--n", str(n),
                       "--field", "rational")
        turaev.append('        {nullptr, "%s", %d, "%s"},\n' % (expr, n, rec["pf"]))

    nullity = []
    for entry_id in NULLITY_IDS:
        rec = run_json(args.bin, "nullity", "--catalog", entry_id, "--field", "p3")
        if not rec["exact"]:
            raise SystemExit("%s: nullity search exhausted its budget" % entry_id)
        nullity.append('        {"%s", %d, %d},\n' % (entry_id, 3, rec["nullity"]))

    text = HEADER % {"sweep": "".join(sweep), "turaev": "".join(turaev),
                     "nullity": "".join(nullity)}
    pathlib.Path(args.out).write_text(text)
    print("wrote %s" % args.out)


if __name__ == "__main__":
    main()
