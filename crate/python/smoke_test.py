#!/usr/bin/env python3
"""Smoke test for the semigroup_forge_py extension module.

Build the extension first:

    cargo build -p semigroup-forge-py

then run this script; it locates the shared library under target/ and
imports it directly.
"""

import json
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def locate_extension():
    candidates = []
    for profile in ("release", "debug"):
        for name in ("libsemigroup_forge_py.so", "libsemigroup_forge_py.dylib"):
            p = ROOT / "target" / profile / name
            if p.exists():
                candidates.append(p)
    if not candidates:
        sys.exit("extension not found; run `cargo build -p semigroup-forge-py` first")
    return max(candidates, key=lambda p: p.stat().st_mtime)


def main():
    src = locate_extension()
    tmp = Path(tempfile.mkdtemp(prefix="semigroup_forge_py_"))
    shutil.copy(src, tmp / "semigroup_forge_py.so")
    sys.path.insert(0, str(tmp))
    import semigroup_forge_py as sf

    h = sf.Semigroup([6, 13, 40, 41])
    assert h.multiplicity == 6
    assert h.frobenius == 35
    assert h.apery() == [0, 13, 26, 39, 40, 41]
    assert h.pseudo_frobenius() == [33, 34, 35]
    assert h.is_stretched()
    assert h.contains(52) and not h.contains(35)
    assert h.max_order(46) == 2
    assert h.matrix() == "[X1^2 X2^3 X3 X4 / X2 X3 X4 X1^7]"
    assert h.tangent_cone_cm() is False

    ideal = h.ideal()
    assert len(ideal) == 6
    degrees = sorted(d for _, d in ideal)
    assert degrees[0] == 52

    record = json.loads(h.analyze_json())
    assert record["schema"] == 1
    assert record["generators"] == [6, 13, 40, 41]
    assert record["tangent_cone"]["cm_formula"] is False

    g = sf.Semigroup([7, 39, 43, 47, 17])
    assert g.matrix() == "[X1^5 X2 X3 X4 X5 / X2 X3 X4 X5^3 X1^3]"
    assert g.tangent_cone_cm() is True

    assert sf.family_j1(3, 4, 1, 1).generators == [6, 13, 40, 41]
    assert sf.family_jn1(3, 5, 4, 4).generators == [7, 39, 43, 47, 17]

    small = sf.enumerate_semigroups(4, 10)
    assert any(s.generators == [2, 3] for s in small)
    assert all(s.multiplicity <= 4 and s.frobenius <= 10 for s in small)

    try:
        sf.Semigroup([2, 4])
        raise AssertionError("gcd 2 accepted")
    except ValueError:
        pass

    print(f"smoke test passed ({len(small)} semigroups enumerated, module at {src})")


if __name__ == "__main__":
    main()
