#!/usr/bin/env python3
"""Smoke test for the ritt_py extension module.

Builds the cdylib if needed, copies it next to this script under the
importable name, and exercises a handful of exact identities end to end.

Usage: python3 python/smoke_test.py
"""

import json
import pathlib
import shutil
import subprocess
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent


def build_module() -> pathlib.Path:
    target = ROOT / "target" / "release" / "libritt_py.so"
    if not target.exists():
        subprocess.run(
            [
                "cargo",
                "build",
                "--release",
                "-p",
                "ritt-py",
                "--features",
                "extension-module",
            ],
            cwd=ROOT,
            check=True,
        )
    dest = pathlib.Path(__file__).resolve().parent / "ritt_py.so"
    shutil.copyfile(target, dest)
    return dest


def main() -> int:
    build_module()
    sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))
    import ritt_py

    failures = 0

    def check(name, cond):
        nonlocal failures
        status = "ok" if cond else "FAIL"
        print(f"  {name}: {status}")
        if not cond:
            failures += 1

    print("expression layer")
    check("T(3) expands", ritt_py.chebyshev(3) == "4*z^3-3*z")
    check(
        "T(2) @ T(3) = T(6)",
        ritt_py.compose("T(2)", "T(3)") == ritt_py.eval_expr("T(6)"),
    )
    check(
        "D_2 by hand",
        ritt_py.eval_expr("1/2*z^2 + 1/2*z^-2") == ritt_py.laurent_d(2),
    )

    print("decomposition")
    chains = ritt_py.decompose("T(6)")
    check("T(6) has two maximal chains", len(chains) == 2)
    chains = ritt_py.decompose("pow(6) + 1")
    check("z^6+1 has two maximal chains", len(chains) == 2)

    print("monodromy")
    t4 = ritt_py.builtin_tuple("chebyshev", 4)
    n4 = ritt_py.builtin_tuple("chebyshev-neg", 4)
    check("chebyshev tuple has genus 0", ritt_py.validate_tuple(t4) == 0)
    fp = json.loads(ritt_py.fiber_product(t4, n4))
    check("T4(x)+T4(y) is reducible", fp["o"] >= 2)
    t2 = ritt_py.builtin_tuple("chebyshev", 2)
    n2 = ritt_py.builtin_tuple("chebyshev-neg", 2)
    fp = json.loads(ritt_py.fiber_product(t2, n2))
    check("T2(x)+T2(y) is irreducible", fp["o"] == 1)

    print("genus")
    check("g(z^2, z^3-3z) = 1", ritt_py.genus_rh2("pow(2)", "z^3-3*z") == 1)
    check("g(T2, T3) = 0", ritt_py.genus_rh2("T(2)", "T(3)") == 0)
    pp = json.loads(ritt_py.passport("3*z^4-4*z^3"))
    parts = sorted(tuple(e["partition"]) for e in pp["entries"])
    check("passport of 3z^4-4z^3", parts == [(1, 1, 2), (1, 3)])
    check("T4 + T4 reducible", ritt_py.irreducible("T(4)", "-T(4)") == "reducible")

    print("classification")
    out = json.loads(ritt_py.verify_family(3, n=2, m=3))
    check("family 3 verifies", out["verified"])
    out = json.loads(
        ritt_py.classify("T(3)", "1/2*z^2+1/2*z^-2", "1/2*z^2+1/2*z^-2", "pow(3)")
    )
    check(
        "T3 o D2 = D2 o z^3 classified as case 4",
        out["verdict"] == "classified"
        and "case-4" in out["witness"]["all_cases"],
    )

    print("move chains")
    out = json.loads(
        ritt_py.ritt_chain(["T(3)", "T(2)"], ["T(2)", "T(3)"], depth=4)
    )
    check("T6 chains one move apart", out["found"] and len(out["moves"]) == 1)
    out = json.loads(ritt_py.first_ritt("D(12)"))
    check("D12 chains connected", out["connected"] and out["lengths_equal"])

    check(
        "common inner factor of (T4, T6)",
        ritt_py.common_inner_factor("T(4)", "T(6)") in ("z^2", "2*z^2-1"),
    )

    print("PASS" if failures == 0 else f"FAIL ({failures})")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
