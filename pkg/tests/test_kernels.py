"""The two sweep kernels must be interchangeable and exact."""

import pytest

from skeinkit import _kernel
from skeinkit._kernel import available_kernels, compile_plan, pick_kernel, run_packed
from skeinkit._sweep_py import replay_circles
from skeinkit.diagram import cable, catalog_lookup, catalog_names, plan_sweep
from skeinkit.jones import bracket

HAVE_C = "c" in available_kernels()
needs_c = pytest.mark.skipif(not HAVE_C, reason="compiled kernel not built")


def test_python_kernel_always_available():
    assert "py" in available_kernels()
    assert pick_kernel("py") is _kernel._sweep_py


def test_pick_kernel_rejects_unknown_name():
    with pytest.raises(ValueError):
        pick_kernel("fortran")


def test_pick_kernel_env_override(monkeypatch):
    monkeypatch.setenv("SKEINKIT_KERNEL", "py")
    assert pick_kernel() is _kernel._sweep_py
    monkeypatch.setenv("SKEINKIT_KERNEL", "")
    assert pick_kernel() is not None


@needs_c
def test_kernels_agree_on_catalog():
    for name in catalog_names():
        pd = catalog_lookup(name)
        if not pd.crossings:
            continue
        assert bracket(pd, kernel="py") == bracket(pd, kernel="c"), name


@needs_c
def test_kernels_agree_on_cables():
    for name in ("3_1", "6_2"):
        pd = cable(catalog_lookup(name), 2)
        assert bracket(pd, kernel="py") == bracket(pd, kernel="c"), name


@needs_c
def test_raw_runs_identical():
    prog = compile_plan(plan_sweep(catalog_lookup("6_3")))
    assert pick_kernel("py").run(prog) == pick_kernel("c").run(prog)


def test_overflow_falls_back_to_python():
    prog = compile_plan(plan_sweep(catalog_lookup("3_1")))
    want = pick_kernel("py").run(prog)

    class Brittle:
        @staticmethod
        def run(_):
            raise OverflowError("coefficient exceeds 64 bits")

    assert run_packed(prog, kernel=Brittle) == want


def test_python_kernel_overflow_is_fatal(monkeypatch):
    # a failure in the fallback kernel itself must surface, not recurse
    def boom(_):
        raise OverflowError("bug in the exact kernel")

    monkeypatch.setattr(_kernel._sweep_py, "run", boom)
    with pytest.raises(OverflowError):
        run_packed((), kernel=_kernel._sweep_py)


def test_replay_circles_counts_match_brute():
    from skeinkit.diagram import apply_state
    pd = catalog_lookup("4_1")
    plan = plan_sweep(pd)
    prog = compile_plan(plan)
    for bits in range(16):
        state = ["AB"[(bits >> i) & 1] for i in range(4)]
        branches = [state[op.crossing] for op in plan.ops]
        assert replay_circles(prog, branches) == apply_state(pd, state).count
