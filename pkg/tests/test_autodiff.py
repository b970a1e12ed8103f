"""Finite-difference validation of every autodiff primitive (float64)."""

import numpy as np
import pytest

from hatlm import autodiff as ad

rng = np.random.default_rng(42)


def fd_check(fn, *arrays, eps=1e-6, tol=1e-5, samples=8):
    """Compare analytic grads of scalar fn(*Vars) against central differences."""
    leaves = [ad.wrap(a.copy(), rg=True) for a in arrays]
    out = fn(*leaves)
    ad.backward(out)
    for leaf, base in zip(leaves, arrays):
        grad = leaf.grad if leaf.grad is not None else np.zeros_like(base)
        for _ in range(samples):
            idx = tuple(int(rng.integers(0, s)) for s in base.shape)
            plus, minus = base.copy(), base.copy()
            plus[idx] += eps
            minus[idx] -= eps
            fp = fn(*[ad.wrap(plus if a is base else a) for a in arrays]).v
            fm = fn(*[ad.wrap(minus if a is base else a) for a in arrays]).v
            num = (fp - fm) / (2 * eps)
            assert abs(num - grad[idx]) <= tol * max(1.0, abs(num), abs(grad[idx])), \
                f"grad mismatch at {idx}: fd={num} analytic={grad[idx]}"


def r(*shape):
    return rng.standard_normal(shape)


def test_add_mul_broadcast():
    fd_check(lambda a, b: ad.sum_(ad.mul(ad.add(a, b), b)), r(3, 4), r(4))


def test_sub():
    fd_check(lambda a, b: ad.sum_(ad.mul(ad.sub(a, b), ad.sub(a, b))), r(2, 3), r(3))


def test_matmul_2d_and_batched():
    fd_check(lambda a, b: ad.sum_(ad.matmul(a, b)), r(3, 4), r(4, 5))
    fd_check(lambda a, b: ad.sum_(ad.mul(ad.matmul(a, b), 2.0)), r(2, 3, 4), r(2, 4, 5))
    fd_check(lambda a, b: ad.sum_(ad.matmul(a, b)), r(2, 3, 4), r(4, 5))


def test_gather_axes():
    idx0 = np.array([0, 2, 2, 1])
    fd_check(lambda a: ad.sum_(ad.mul(ad.gather(a, idx0), 3.0)), r(4, 5))
    idx1 = np.array([1, 0, 1, 3, 3])
    fd_check(lambda a: ad.sum_(ad.mul(ad.gather(a, idx1, axis=1), 2.0)), r(2, 4, 3))


def test_reshape_transpose_concat_narrow():
    m = r(3, 4)
    fd_check(lambda a: ad.sum_(ad.mul(ad.transpose(ad.reshape(a, (4, 3)), (1, 0)), m)),
             r(2, 6))
    fd_check(lambda a, b: ad.sum_(ad.mul(ad.narrow(ad.concat([a, b], axis=1), 1, 1, 3), 2.0)),
             r(2, 2), r(2, 3))


def test_rsqrt_tanh_sigmoid_silu():
    fd_check(lambda a: ad.sum_(ad.rsqrt(ad.add(ad.mul(a, a), 0.5))), r(3, 3))
    fd_check(lambda a: ad.sum_(ad.mul(ad.tanh(a), ad.sigmoid(a))), r(3, 3))
    fd_check(lambda a: ad.sum_(ad.silu(a)), r(4, 2))


def test_rms_norm_with_gain():
    fd_check(lambda a, g: ad.sum_(ad.mul(ad.rms_norm(a, 1e-5, g), 2.0)), r(3, 5), r(5))


def test_softcap():
    fd_check(lambda a: ad.sum_(ad.softcap(a, 3.0)), 5 * r(4, 4))


def test_masked_softmax():
    mask = np.tril(np.ones((4, 4), dtype=bool))
    m = r(2, 4, 4)
    fd_check(lambda a: ad.sum_(ad.mul(ad.masked_softmax(a, mask), m)), r(2, 4, 4))


def test_masked_softmax_empty_row_raises():
    from hatlm.kernels import InternalInvariantError
    with pytest.raises(InternalInvariantError):
        ad.masked_softmax(ad.wrap(np.zeros((2, 3))), np.zeros((2, 3), dtype=bool))


def test_rope():
    m = r(2, 5, 6)
    fd_check(lambda a: ad.sum_(ad.mul(ad.rope(a, np.arange(5), 100.0), m)), r(2, 5, 6))


def test_expand_sum():
    m = r(3, 4, 5)
    fd_check(lambda a: ad.sum_(ad.mul(ad.expand(a, (3, 4, 5)), m)), r(1, 4, 5))
    m2 = r(3, 1, 5)
    fd_check(lambda a: ad.sum_(ad.mul(ad.sum_(a, axis=1, keepdims=True), m2)), r(3, 4, 5))


def test_cross_entropy():
    fd_check(lambda a: ad.cross_entropy(a, np.array([1, 0, 3])), r(3, 5))


def test_swiglu_composite():
    fd_check(lambda x, g, u, d: ad.sum_(ad.swiglu(x, g, u, d)),
             r(3, 4), r(4, 6), r(4, 6), r(6, 4))


def test_backward_requires_scalar_root():
    with pytest.raises(ValueError):
        ad.backward(ad.wrap(np.ones(3), rg=True))


def test_no_grad_leaves_skip_tape():
    a = ad.wrap(r(3, 3), rg=False)
    b = ad.wrap(r(3, 3), rg=True)
    out = ad.sum_(ad.matmul(a, b))
    ad.backward(out)
    assert a.grad is None and b.grad is not None


def test_grad_accumulates_over_reuse():
    a = ad.wrap(np.array([2.0]), rg=True)
    out = ad.sum_(ad.add(ad.mul(a, a), a))  # d/da (a^2 + a) = 2a + 1
    ad.backward(out)
    assert np.allclose(a.grad, [5.0])
