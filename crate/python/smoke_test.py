"""Smoke test for the yangian_py extension.

Build first with `cargo build --release -p yangian-py`, then run
`python3 python/smoke_test.py`. The shared library is looked up in
target/release and target/debug unless YANGIAN_PY_LIB points at it.
"""

import importlib.util
import json
import os
import shutil
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def find_library():
    env = os.environ.get("YANGIAN_PY_LIB")
    if env:
        return Path(env)
    for profile in ("release", "debug"):
        for name in ("libyangian_py.so", "libyangian_py.dylib", "yangian_py.dll"):
            p = ROOT / "target" / profile / name
            if p.exists():
                return p
    sys.exit("yangian_py library not found; run `cargo build --release -p yangian-py`")


def load():
    lib = find_library()
    tmp = Path(tempfile.mkdtemp())
    suffix = ".pyd" if lib.suffix == ".dll" else ".so"
    target = tmp / ("yangian_py" + suffix)
    shutil.copy(lib, target)
    spec = importlib.util.spec_from_file_location("yangian_py", target)
    mod = importlib.util.module_from_spec(spec)
    spec.loader.exec_module(mod)
    return mod


def main():
    y = load()
    assert "gauss/hihj" in y.families("relations")

    # [t_11^(1), t_12^(1)] = t_12^(1) in Y(gl_2)
    assert y.commutator("A", 2, (1, 1, 1), (1, 2, 1)) == "t12^(1)", y.commutator("A", 2, (1, 1, 1), (1, 2, 1))

    rep = json.loads(y.verify("relations", kind="B", n=1, backend="oracle"))
    assert rep["run"]["backend"] == "oracle"
    assert rep["cases"], "no cases"
    bad = [c for c in rep["cases"] if c["status"] not in ("PASS", "SKIP")]
    assert not bad, bad

    try:
        y.verify("relations", kind="E", n=1)
    except ValueError:
        pass
    else:
        raise AssertionError("type E accepted")

    print(f"ok: {len(rep['cases'])} cases, version {y.__version__}")


if __name__ == "__main__":
    main()
