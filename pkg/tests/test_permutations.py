import pytest
from hypothesis import given, settings

from skewpos import (
    Partition,
    SkewDiagram,
    baf,
    baf_to_necklace,
    necklace,
    necklace_to_baf,
    verify_f_factorization,
    w_grassmannian,
    w_skew,
)
from skewpos.permutations import (
    BoundedAffinePermutation,
    GrassmannNecklace,
    PermWord,
    compose,
    inverse,
)

from conftest import skew_diagrams

RUNNING_NECKLACE = (
    (1, 6, 8, 11, 12), (1, 2, 8, 11, 12), (2, 3, 8, 11, 12), (3, 4, 8, 11, 12),
    (3, 4, 5, 11, 12), (4, 5, 6, 11, 12), (5, 6, 7, 11, 12), (5, 6, 7, 8, 12),
    (5, 6, 8, 9, 12), (5, 6, 8, 10, 12), (5, 6, 8, 10, 11), (5, 6, 8, 11, 12),
)

DISCONNECTED_NECKLACE = (
    (1, 4, 8, 9), (1, 2, 8, 9), (2, 3, 8, 9), (3, 4, 8, 9), (3, 4, 8, 9),
    (3, 4, 6, 9), (3, 4, 6, 7), (3, 4, 7, 8), (3, 4, 8, 9),
)


class TestNecklace:
    def test_running(self, running):
        assert necklace(running).entries == RUNNING_NECKLACE

    def test_disconnected(self, disconnected):
        assert necklace(disconnected).entries == DISCONNECTED_NECKLACE

    def test_empty_skew(self):
        d = SkewDiagram(8, 3, Partition((4, 2, 1)), Partition((4, 2, 1)))
        N = necklace(d)
        assert all(e == d.I_mu() for e in N.entries)

    @given(skew_diagrams())
    def test_source_conditions(self, d):
        necklace(d)  # the constructor enforces the exchange axioms

    def test_invalid_necklace_rejected(self):
        with pytest.raises(ValueError):
            GrassmannNecklace(4, 2, ((1, 2), (3, 4), (1, 2), (1, 2)))


class TestBaf:
    def test_running_values(self, running):
        f = baf(running)
        horizontal = {1: 3, 2: 4, 3: 6, 4: 7, 7: 9, 9: 10, 10: 12}
        vertical = {6: 2 + 12, 8: 5 + 12, 11: 8 + 12, 12: 11 + 12, 5: 1 + 12}
        for i, v in {**horizontal, **vertical}.items():
            assert f(i) == v

    def test_disconnected_fixed_point(self, disconnected):
        f = baf(disconnected)
        assert f(5) == 5
        assert f.fixed_point_decorations() == {5: "clockwise"}

    def test_full_rectangle(self):
        n, k = 7, 3
        d = SkewDiagram(n, k, Partition((4, 4, 4)), Partition((4, 4, 4)))
        f = baf(d)
        assert f.window == tuple(
            i + n if i <= k else i for i in range(1, n + 1)
        )

    def test_window_validation(self):
        with pytest.raises(ValueError, match="outside"):
            BoundedAffinePermutation(4, 2, (1, 2, 3, 3))
        with pytest.raises(ValueError, match="distinct"):
            BoundedAffinePermutation(4, 2, (1, 5, 3, 8))
        with pytest.raises(ValueError, match="equal k"):
            BoundedAffinePermutation(4, 2, (5, 6, 7, 4))
        BoundedAffinePermutation(4, 2, (5, 6, 3, 4))

    def test_affine_extension(self, running):
        f = baf(running)
        assert f(1 + 12) == f(1) + 12


class TestBijection:
    def test_running_pair(self, running):
        assert necklace_to_baf(necklace(running)).window == baf(running).window
        assert baf_to_necklace(baf(running)).entries == necklace(running).entries

    def test_constant_necklace(self):
        n, k = 7, 3
        N = GrassmannNecklace(n, k, tuple((1, 2, 3) for _ in range(n)))
        f = necklace_to_baf(N)
        assert f.window == tuple(range(1 + n, k + n + 1)) + tuple(range(k + 1, n + 1))
        assert baf_to_necklace(f).entries == N.entries

    @given(skew_diagrams())
    @settings(max_examples=150)
    def test_roundtrip(self, d):
        N, f = necklace(d), baf(d)
        assert necklace_to_baf(N).window == f.window
        assert baf_to_necklace(f).entries == N.entries


class TestGrassmannianPermutations:
    def test_running_w_lambda(self, running):
        assert w_grassmannian(running.lam, 12, 5).perm == (1, 2, 5, 8, 11, 3, 4, 6, 7, 9, 10, 12)

    def test_full_rectangle_identity(self):
        w = w_grassmannian(Partition((4, 4, 4)), 7, 3)
        assert w.perm == tuple(range(1, 8)) and w.word == ()

    def test_empty_partition(self):
        n, k = 9, 4
        w = w_grassmannian(Partition(), n, k)
        assert w.perm == tuple(range(n - k + 1, n + 1)) + tuple(range(1, n - k + 1))

    @given(skew_diagrams())
    def test_word_length(self, d):
        w = w_grassmannian(d.lam, d.n, d.k)
        assert len(w.word) == d.k * (d.n - d.k) - d.lam.size()

    def test_grassmannian_windows(self, running):
        w = w_grassmannian(running.lam, 12, 5).perm
        assert list(w[:5]) == sorted(w[:5]) and list(w[5:]) == sorted(w[5:])


class TestWSkew:
    def test_running_length(self, running):
        assert w_skew(running).length() == 23 - 8

    def test_empty_skew_identity(self):
        d = SkewDiagram(8, 3, Partition((3, 1)), Partition((3, 1)))
        assert w_skew(d).perm == tuple(range(1, 9))

    @given(skew_diagrams())
    @settings(max_examples=100)
    def test_factorization_and_inverse(self, d):
        w = w_skew(d)
        wl = w_grassmannian(d.lam, d.n, d.k)
        wm = w_grassmannian(d.mu, d.n, d.k)
        assert compose(w.perm, wl.perm) == wm.perm
        assert wm.length() == w.length() + wl.length()
        assert w.length() == d.size()
        assert baf(d).mod_n() == inverse(w.perm)


class TestFFactorization:
    def test_running(self, running):
        assert verify_f_factorization(running)

    def test_empty_skew(self):
        d = SkewDiagram(8, 3, Partition((3, 1)), Partition((3, 1)))
        assert verify_f_factorization(d)

    @given(skew_diagrams())
    @settings(max_examples=150)
    def test_random(self, d):
        assert verify_f_factorization(d)


class TestPermWord:
    def test_unreduced_word_rejected(self):
        with pytest.raises(ValueError):
            PermWord((1, 2, 3), (1, 1))

    def test_wrong_word_rejected(self):
        with pytest.raises(ValueError):
            PermWord((2, 1, 3), (2,))
