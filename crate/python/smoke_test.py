"""Smoke test for the `gag` Python extension.

Build first with `cargo build --release -p gag-py --features extension-module`;
the script loads the shared library from target/ if `gag` is not installed.
"""

import importlib.machinery
import importlib.util
import json
import pathlib
import sys


def load():
    try:
        import gag

        return gag
    except ImportError:
        pass
    root = pathlib.Path(__file__).resolve().parent.parent
    for profile in ("release", "debug"):
        lib = root / "target" / profile / "libgag.so"
        if lib.exists():
            loader = importlib.machinery.ExtensionFileLoader("gag", str(lib))
            spec = importlib.util.spec_from_loader("gag", loader)
            module = importlib.util.module_from_spec(spec)
            loader.exec_module(module)
            return module
    sys.exit("gag extension not found; build it with cargo first")


def main():
    gag = load()
    g = gag.Model.example()
    assert (g.order, g.gammas) == (5, 1)
    laws, identities = g.profile()
    assert all(holds for _, holds in laws), laws
    assert identities == [1]
    assert g.op(1, 0, 2) == 2 and g.op(2, 0, 1) == 4
    assert g.ideals("two-sided") == [[0], [0, 1, 2, 3, 4]]
    assert g.is_intra_regular()
    assert g.intra_witness(1) == (1, 1, 0, 0, 0)

    reports = dict(g.verify())
    assert len(reports) == len(gag.theorem_ids()) == 31
    assert "fail" not in reports.values()
    doc = json.loads(g.verify_json(["KI"]))
    assert doc["reports"][0]["status"] == "pass"

    assert gag.Model.parse(g.to_text()) == g
    assert g.canonical() == gag.Model.parse(g.canonical().to_json())
    counts = [len(gag.enumerate(n, 1, "ag")) for n in (1, 2, 3)]
    assert counts == [1, 3, 20], counts
    try:
        gag.Model(2, 1, [0, 1, 2, 0])
    except ValueError:
        pass
    else:
        raise AssertionError("out-of-range entry accepted")
    print("python smoke test ok:", g, "classes of order <= 3:", counts)


if __name__ == "__main__":
    main()
