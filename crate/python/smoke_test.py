"""Build the extension module with cargo, import it and check a few values.

Usage: python3 python/smoke_test.py [--no-build]
"""

import argparse
import importlib.util
import pathlib
import shutil
import subprocess
import sys
import tempfile

ROOT = pathlib.Path(__file__).resolve().parent.parent


def build() -> pathlib.Path:
    subprocess.run(
        ["cargo", "build", "--release", "-p", "a1hit-python", "--features", "extension-module"],
        cwd=ROOT,
        check=True,
    )
    return ROOT / "target" / "release" / "liba1hit.so"


def load(lib: pathlib.Path):
    tmp = pathlib.Path(tempfile.mkdtemp())
    target = tmp / "a1hit.so"
    shutil.copy(lib, target)
    spec = importlib.util.spec_from_file_location("a1hit", target)
    module = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(module)
    return module


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--no-build", action="store_true")
    args = parser.parse_args()
    lib = ROOT / "target" / "release" / "liba1hit.so" if args.no_build else build()
    a1hit = load(lib)

    nonzero = [(c.n, c.d, c.dim_u) for c in a1hit.sweep(1, 6, 18) if c.dim_u]
    assert nonzero == [(1, 1, 1), (2, 2, 1), (5, 9, 1), (6, 10, 1)], nonzero
    assert all(c.dim_u == 0 for c in a1hit.sweep(0, 5, 20))

    cell = a1hit.u_cell(1, 5, 9)
    assert cell.reps == ["x1^2 x2^4 x3 x4 x5 + x1^4 x2^2 x3 x4 x5"], cell.reps

    u1 = a1hit.Series.named("u1").coefficients(6, 18)
    assert set(u1) == {(n, d) for n, d, _ in nonzero}
    assert str(a1hit.Series.named("Qn", 3)) == "t^-3 + 1 - t^2"

    for n in range(1, 13):
        assert a1hit.build_pn(n).validate() == []
    assert a1hit.build_pn(6, 28).u1() == {10: 1}

    for suite in a1hit.suites():
        report = a1hit.run_suite(suite)
        assert report.passed, report.text
    print("python smoke test: ok")
    return 0


if __name__ == "__main__":
    sys.exit(main())
