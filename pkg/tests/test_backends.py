"""The compiled and pure-Python kernels must be byte-for-byte interchangeable."""

import pytest

from grasscoh import _backend, _kernel_py

try:
    from grasscoh import _kernel_cy
except ImportError:
    _kernel_cy = None

needs_ext = pytest.mark.skipif(_kernel_cy is None,
                               reason="compiled kernel not built")


@needs_ext
def test_expvecs_agree():
    for k in range(0, 7):
        for w in range(0, 14):
            assert _kernel_cy.expvecs_of_weight(w, k) == \
                _kernel_py.expvecs_of_weight(w, k)


@needs_ext
def test_vertical_strips_agree():
    cases = [((), 1, 3, 3), ((), 3, 3, 3), ((2, 1), 2, 3, 3),
             ((3, 3, 1), 3, 4, 4), ((2, 2), 1, 2, 2), ((5,), 2, 1, 6),
             ((4, 2, 2, 1), 4, 5, 4), ((1, 1, 1), 2, 3, 1)]
    for parts, i, rows, cap in cases:
        assert _kernel_cy.vertical_strips(parts, i, rows, cap) == \
            _kernel_py.vertical_strips(parts, i, rows, cap)


@needs_ext
def test_vertical_strips_agree_exhaustive():
    from grasscoh.partitions import partitions_in_box
    for k in range(1, 4):
        for n in range(1, 4):
            for w in range(k * n + 1):
                for lam in partitions_in_box(w, k, n):
                    for i in range(1, k + 1):
                        assert _kernel_cy.vertical_strips(lam, i, k, n) == \
                            _kernel_py.vertical_strips(lam, i, k, n)


@needs_ext
def test_swap_backend_end_to_end():
    from grasscoh.freepoly import dual_class_closed
    from grasscoh.ring import RingContext, reduce_free

    def probe():
        ctx = RingContext(3, 5)
        return reduce_free(dual_class_closed(6, 3), ctx)

    prev = _backend.set_kernel(_kernel_py)
    try:
        with_py = probe()
    finally:
        _backend.set_kernel(prev)
    assert probe() == with_py


def test_backend_name_reported():
    assert _backend.backend_name() in ("python", "cython")
