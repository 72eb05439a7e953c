"""Quiver mutation, framing, colouring, isomorphism and canonical keys."""

from __future__ import annotations

import random

import pytest

from greenseq.quiver import (
    CANONICAL_MAX_N,
    ExtMatrix,
    QuiverError,
    VertexColor,
    apply_perm,
    canonical_form,
    canonical_key,
    coframed,
    framed,
    is_isomorphic,
    mutate,
    mutate_seq,
    vertex_color,
)

from arrow_oracle import oracle_mutate_matrix

A2 = ExtMatrix.from_rows(2, 0, [[0, 1], [-1, 0]])
MARKOV = ExtMatrix.from_rows(3, 0, [[0, 2, -2], [-2, 0, 2], [2, -2, 0]])


def random_quiver(rng: random.Random, n: int, m: int, max_mult: int = 3) -> ExtMatrix:
    rows = [[0] * n for _ in range(n + m)]
    for i in range(n):
        for j in range(i + 1, n):
            c = rng.randint(-max_mult, max_mult)
            rows[i][j] = c
            rows[j][i] = -c
    for f in range(m):
        for j in range(n):
            rows[n + f][j] = rng.randint(-max_mult, max_mult)
    return ExtMatrix.from_rows(n, m, rows)


class TestExtMatrix:
    def test_rejects_non_skew_top_block(self):
        with pytest.raises(QuiverError, match="skew"):
            ExtMatrix.from_rows(2, 0, [[0, 1], [1, 0]])

    def test_rejects_loops(self):
        with pytest.raises(QuiverError, match="loop"):
            ExtMatrix.from_rows(2, 0, [[1, 0], [0, 0]])

    def test_rejects_bad_shape(self):
        with pytest.raises(QuiverError):
            ExtMatrix.from_rows(2, 1, [[0, 1], [-1, 0]])


class TestMutate:
    def test_a2_framed_at_1_matches_paper(self):
        got = mutate(framed(A2), 1)
        # arrows 2->1, 1->1', 1'->2, 2'->2
        assert got.rows == ((0, -1), (1, 0), (-1, 1), (0, 1))

    def test_involution(self):
        rng = random.Random(7)
        for _ in range(200):
            n = rng.randint(1, 4)
            q = random_quiver(rng, n, rng.choice([0, n]))
            k = rng.randint(1, n)
            assert mutate(mutate(q, k), k) == q

    def test_skew_symmetry_preserved(self):
        rng = random.Random(11)
        for _ in range(100):
            q = random_quiver(rng, 4, 4)
            q2 = mutate(q, rng.randint(1, 4))
            for i in range(4):
                for j in range(4):
                    assert q2.rows[i][j] == -q2.rows[j][i]

    def test_matches_arrow_level_oracle(self):
        rng = random.Random(101)
        for _ in range(300):
            n = rng.randint(1, 4)
            m = rng.choice([0, 1, n])
            q = random_quiver(rng, n, m)
            k = rng.randint(1, n)
            expected = oracle_mutate_matrix(n, m, q.rows, k)
            assert mutate(q, k).rows == expected

    def test_frozen_index_rejected(self):
        q = framed(A2)
        with pytest.raises(QuiverError):
            mutate(q, 3)
        with pytest.raises(QuiverError):
            mutate(q, 0)


class TestFraming:
    def test_framed_a2(self):
        assert framed(A2).rows == ((0, 1), (-1, 0), (1, 0), (0, 1))

    def test_coframed_a2(self):
        assert coframed(A2).rows == ((0, 1), (-1, 0), (-1, 0), (0, -1))

    def test_framed_single_vertex(self):
        q = ExtMatrix.from_rows(1, 0, [[0]])
        assert framed(q).rows == ((0,), (1,))
        assert coframed(q).rows == ((0,), (-1,))

    def test_framed_markov_shape(self):
        f = framed(MARKOV)
        assert (f.n, f.m) == (3, 3)
        assert f.bottom == ((1, 0, 0), (0, 1, 0), (0, 0, 1))

    def test_coframed_is_framed_with_negated_bottom(self):
        rng = random.Random(3)
        for _ in range(20):
            q = random_quiver(rng, rng.randint(1, 4), 0)
            f, cf = framed(q), coframed(q)
            assert cf.top == f.top
            assert cf.bottom == tuple(
                tuple(-e for e in row) for row in f.bottom
            )

    def test_framed_rejects_frozen_input(self):
        with pytest.raises(QuiverError):
            framed(framed(A2))


class TestVertexColor:
    def test_framed_all_green(self):
        f = framed(A2)
        assert vertex_color(f, 1) is VertexColor.GREEN
        assert vertex_color(f, 2) is VertexColor.GREEN

    def test_coframed_all_red(self):
        cf = coframed(A2)
        assert vertex_color(cf, 1) is VertexColor.RED
        assert vertex_color(cf, 2) is VertexColor.RED

    def test_a2_after_mutation_at_1(self):
        q = mutate(framed(A2), 1)
        assert vertex_color(q, 1) is VertexColor.RED
        assert vertex_color(q, 2) is VertexColor.GREEN

    def test_dichotomy_along_random_trajectories(self):
        # reachable matrices never show a mixed-sign frozen column
        rng = random.Random(23)
        for _ in range(100):
            n = rng.randint(1, 4)
            q = framed(random_quiver(rng, n, 0))
            for _ in range(rng.randint(0, 12)):
                q = mutate(q, rng.randint(1, n))
                for i in range(1, n + 1):
                    assert vertex_color(q, i) is not VertexColor.NEITHER

    def test_neither_on_unreachable_matrix(self):
        q = ExtMatrix.from_rows(1, 2, [[0], [1], [-1]])
        assert vertex_color(q, 1) is VertexColor.NEITHER


class TestIsomorphism:
    def test_identity(self):
        f = framed(A2)
        assert is_isomorphic(f, f) == (1, 2)

    def test_a2_sequence_121_hits_coframed_via_swap(self):
        got = is_isomorphic(mutate_seq(framed(A2), [1, 2, 1]), coframed(A2))
        assert got == (2, 1)

    def test_framed_vs_coframed_not_isomorphic(self):
        assert is_isomorphic(framed(A2), coframed(A2)) is None

    def test_explicit_permutations_are_found(self):
        rng = random.Random(5)
        for _ in range(50):
            n = rng.randint(1, 4)
            q = random_quiver(rng, n, rng.choice([0, n]))
            sigma = list(range(1, n + 1))
            rng.shuffle(sigma)
            sigma = tuple(sigma)
            witness = is_isomorphic(q, apply_perm(q, sigma))
            assert witness is not None
            assert apply_perm(q, witness) == apply_perm(q, sigma)

    def test_shape_mismatch_gives_none(self):
        assert is_isomorphic(A2, framed(A2)) is None


class TestCanonicalKey:
    def test_invariant_under_permutation(self):
        rng = random.Random(13)
        for _ in range(50):
            n = rng.randint(1, 5)
            q = random_quiver(rng, n, rng.choice([0, n]))
            sigma = list(range(1, n + 1))
            rng.shuffle(sigma)
            assert canonical_key(q) == canonical_key(apply_perm(q, tuple(sigma)))

    def test_separates_framed_and_coframed(self):
        # brute-force orbit minimum agrees: the two orbits are disjoint
        assert canonical_key(framed(A2)) != canonical_key(coframed(A2))

    def test_key_matches_isomorphism(self):
        rng = random.Random(17)
        quivers = [random_quiver(rng, 3, 3, 2) for _ in range(40)]
        for a in quivers[:10]:
            for b in quivers[:10]:
                same_key = canonical_key(a) == canonical_key(b)
                assert same_key == (is_isomorphic(a, b) is not None)

    def test_a2_pentagon_has_five_classes(self):
        seen = set()
        frontier = [framed(A2)]
        seen_keys = {canonical_key(framed(A2))}
        while frontier:
            q = frontier.pop()
            for k in (1, 2):
                nxt = mutate(q, k)
                key = canonical_key(nxt)
                if key not in seen_keys:
                    seen_keys.add(key)
                    frontier.append(nxt)
        assert len(seen_keys) == 5

    def test_canonical_form_witness_is_consistent(self):
        rng = random.Random(29)
        for _ in range(30):
            q = random_quiver(rng, 4, 4)
            canon, sigma = canonical_form(q)
            assert apply_perm(q, sigma) == canon

    def test_cap_is_enforced(self):
        n = CANONICAL_MAX_N + 1
        q = ExtMatrix.from_rows(n, 0, [[0] * n for _ in range(n)])
        with pytest.raises(QuiverError, match="capped"):
            canonical_key(q)
