#!/usr/bin/env python3
"""Smoke test for the pomega_py extension module.

Build the module first:

    cargo build -p pomega-py --release

then run this script from the repository root (or anywhere):

    python3 python/smoke_test.py
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path


def load_module():
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / "release" / "libpomega_py.so",
        root / "target" / "debug" / "libpomega_py.so",
    ]
    lib = next((c for c in candidates if c.exists()), None)
    if lib is None:
        sys.exit("build the bindings first: cargo build -p pomega-py --release")
    stage = Path(tempfile.mkdtemp(prefix="pomega_py_"))
    shutil.copy(lib, stage / "pomega_py.so")
    sys.path.insert(0, str(stage))
    import pomega_py

    return pomega_py


def main():
    m = load_module()

    # tiny homology table: the n = 5, p = 3 window sits at k = 2
    c = m.OmegaComplex(5, 3)
    assert (c.n, c.p) == (5, 3)
    assert c.slash_dim(2, 0) == 1
    assert c.slash_dim(3, 1) == 1
    assert c.total_slash_at(2) == 2
    assert c.slash_dim(1, 0) == 0
    assert c.euler_agrees()
    report = json.loads(c.report_json())
    assert report["n"] == 5 and report["p"] == 3

    # the characteristic-2 complex is exact
    c2 = m.OmegaComplex(4, 2)
    assert all(d == 0 for (_, _, d) in json.loads(c2.report_json())["slash"])

    # closed-form counts at figure scale
    assert m.count_paths(12, 6, 1, 6) == 131
    assert m.dim_h0(12, 6, 7) == 131
    assert m.dim_h0(13, 5, 7) == 507
    assert m.dim_simple(13, 6, 7) == 417

    # ballot paths and bounded enumeration
    assert m.path_strings(4, 2, 1, None) == ["RRUU", "RURU"]
    assert len(m.path_strings(12, 6, 1, 6)) == 131

    # the single good tableau of the running example
    tabs = m.p_standard_tableaux(5, 2, 3)
    assert tabs == [([1, 3, 5], [2, 4])]

    # density/threshold statistics
    assert m.density(5, [1, 3]) == [1, 2, 2]
    assert m.threshold(5, [1, 3]) == 2
    assert m.threshold(9, [2, 4, 6]) == 0

    # quotient basis export and radical
    basis = json.loads(m.h0_basis_json(5, 2, 3))
    assert basis["tableaux"] == [[[1, 3, 5], [2, 4]]]
    assert m.radical_dim(5, 2, 3) == 4

    # boundary matrix exchange format
    matrix = json.loads(m.boundary_matrix_json(3, 2, 5))
    assert matrix == {"p": 5, "rows": 3, "cols": 3, "entries": [1, 1, 0, 1, 0, 1, 0, 1, 1]}

    # one seeded verification suite end to end
    ok, cases, witness = m.verify_suite("curved", n_max=6, samples=25)
    assert ok and cases == 25 and witness is None, witness

    print("pomega_py smoke test: all checks passed")


if __name__ == "__main__":
    main()
