from collections import Counter
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tropmat import (
    CapExceeded,
    TropicalPoint,
    affine_cell_dim,
    build_polytope,
    cell_dimension,
    cross_validate,
    enumerate_all_cells,
    enumerate_maximal_cells,
    fine_type,
    hypersimplex_coarse_types,
    in_tconv,
    pseudovertices,
    maximal_cell_coarse_types,
    trop_combination,
    trop_segment,
    uniform_matroid,
)

F_VECTOR = (14, 78, 172, 180, 73)


class TestMaximalCells:
    def test_seventy_three(self, running_polytope):
        recs = enumerate_maximal_cells(running_polytope)
        assert len(recs) == 73
        split = Counter(sum(1 for x in rec.coarse if x) for rec in recs)
        assert split == {1: 5, 2: 20, 3: 48}

    def test_every_witness_realizes_its_type(self, running_polytope):
        for rec in enumerate_maximal_cells(running_polytope):
            direct = fine_type(rec.witness, running_polytope.generators)
            assert direct.entries == rec.fine_type.entries
            assert rec.dim == 4

    def test_cap(self, running_polytope, k4_matroid):
        with pytest.raises(CapExceeded):
            enumerate_maximal_cells(running_polytope, cap=100)
        with pytest.raises(CapExceeded):
            enumerate_maximal_cells(build_polytope(k4_matroid))

    def test_uniform_counts(self, u23_polytope, u24_polytope, u33_polytope):
        assert len(enumerate_maximal_cells(u23_polytope)) == 9
        assert len(enumerate_maximal_cells(u24_polytope)) == 40
        assert len(enumerate_maximal_cells(u33_polytope)) == 16


class TestFullComplex:
    def test_f_vector(self, running_complex):
        assert running_complex.f_vector == F_VECTOR
        assert running_complex.counts_ok()

    def test_euler_characteristic(self, running_complex):
        euler = sum((-1) ** i * c for i, c in enumerate(running_complex.f_vector))
        assert euler == 1

    def test_bounded_subcomplex(self, running_complex):
        bounded = Counter(rec.dim for rec in running_complex.cells if rec.bounded)
        assert bounded == {0: 14, 1: 29, 2: 16}

    def test_zero_cells_are_the_pseudovertices(self, running_polytope, running_complex):
        zero = {rec.witness for rec in running_complex.cells if rec.dim == 0}
        assert zero == {pv.point for pv in pseudovertices(running_polytope)}

    def test_every_cell_witness_realizes_its_type(self, running_polytope, running_complex):
        for rec in running_complex.cells:
            direct = fine_type(rec.witness, running_polytope.generators)
            assert direct.entries == rec.fine_type.entries
            assert rec.dim == cell_dimension(rec.fine_type)
            assert rec.bounded == all(rec.fine_type.entries)
            assert rec.bounded == in_tconv(rec.witness, running_polytope.generators)

    def test_affine_dimension_agrees_everywhere(self, running_polytope, running_complex):
        for rec in running_complex.cells:
            assert affine_cell_dim(running_polytope, rec.fine_type) == rec.dim

    def test_u24_complex(self, u24_polytope):
        cx = enumerate_all_cells(u24_polytope)
        assert cx.f_vector == (11, 50, 78, 40)
        euler = sum((-1) ** i * c for i, c in enumerate(cx.f_vector))
        assert euler == -1

    def test_u23_complex(self, u23_polytope):
        assert enumerate_all_cells(u23_polytope).f_vector == (4, 12, 9)

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_single_generator_gives_the_sector_fan(self, d):
        cx = enumerate_all_cells([TropicalPoint.origin(d + 1)])
        assert cx.f_vector == tuple(comb(d + 1, d + 1 - i) for i in range(d + 1))


class TestCoarseTypeFormula:
    def test_sample_rows(self, running_matroid):
        rows = dict(maximal_cell_coarse_types(running_matroid))
        assert rows[(3,)] == (0, 0, 8, 0, 0)
        assert rows[(1, 2)] == (6, 2, 0, 0, 0)
        assert rows[(4, 2, 1)] == (1, 2, 0, 5, 0)
        assert len(rows) == 73

    def test_cross_validation(self, running_polytope, u23_polytope, u24_polytope,
                              u33_polytope):
        for p in (running_polytope, u23_polytope, u24_polytope, u33_polytope):
            report = cross_validate(p)
            assert report.ok
            assert report.multiset_equal and report.set_equal
            assert not report.only_enumerated and not report.only_formula

    def test_summary_string(self, running_polytope):
        assert cross_validate(running_polytope).summary() == (
            "OK: 73 cells, formula == enumeration"
        )

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_rank_one_overcounts_as_a_multiset_only(self, n):
        # the counting formula assumes rank at least two; on the tropical
        # simplex it repeats types, so only the set comparison survives
        p = build_polytope(uniform_matroid(1, n))
        report = cross_validate(p)
        assert report.set_equal
        assert not report.multiset_equal
        assert report.cell_count == {2: 3, 3: 10, 4: 29}[n]
        assert report.formula_count == {2: 4, 3: 15, 4: 64}[n]


class TestHypersimplexFormula:
    def test_frozen_tables(self):
        assert hypersimplex_coarse_types(2, 2) == ((3, 0, 0), (2, 1, 0))
        assert hypersimplex_coarse_types(2, 3) == (
            (6, 0, 0, 0),
            (4, 2, 0, 0),
            (3, 2, 1, 0),
        )
        assert hypersimplex_coarse_types(3, 3) == ((4, 0, 0, 0), (3, 1, 0, 0))

    def test_requires_interior_rank(self):
        with pytest.raises(ValueError):
            hypersimplex_coarse_types(1, 3)
        with pytest.raises(ValueError):
            hypersimplex_coarse_types(4, 3)

    @pytest.mark.parametrize(
        "k,d", [(2, 2), (2, 3), (3, 3)]
    )
    def test_matches_brute_force_orbits(self, k, d):
        p = build_polytope(uniform_matroid(k, d + 1))
        orbits = {
            tuple(sorted(rec.coarse, reverse=True))
            for rec in enumerate_maximal_cells(p)
        }
        assert set(hypersimplex_coarse_types(k, d)) == orbits

    @pytest.mark.parametrize("k,d", [(2, 2), (2, 3), (3, 3)])
    def test_excluded_head_exceeds_the_generator_count(self, k, d):
        # the alpha = 0 row would claim more generators in one sector than exist
        assert comb(d + 1 - 0, k) + comb(d, k - 1) > comb(d + 1, k)


small_coords = st.integers(min_value=-3, max_value=3)


def small_configs(n_coords: int, max_gens: int):
    point = st.lists(small_coords, min_size=n_coords, max_size=n_coords).map(
        TropicalPoint
    )
    return st.lists(point, min_size=1, max_size=max_gens)


class TestRandomizedConsistency:
    @given(small_configs(2, 3))
    @settings(max_examples=40, deadline=None)
    def test_line_complexes(self, gens):
        cx = enumerate_all_cells(gens)
        euler = sum((-1) ** i * c for i, c in enumerate(cx.f_vector))
        assert euler == -1
        assert cx.counts_ok()
        for rec in cx.cells:
            assert fine_type(rec.witness, gens).entries == rec.fine_type.entries
            assert affine_cell_dim(gens, rec.fine_type) == rec.dim

    @given(small_configs(3, 3))
    @settings(max_examples=25, deadline=None)
    def test_plane_complexes(self, gens):
        cx = enumerate_all_cells(gens)
        euler = sum((-1) ** i * c for i, c in enumerate(cx.f_vector))
        assert euler == 1
        assert cx.counts_ok()
        for rec in cx.cells:
            assert fine_type(rec.witness, gens).entries == rec.fine_type.entries

    @given(
        lams1=st.lists(st.integers(min_value=-4, max_value=4), min_size=8, max_size=8),
        lams2=st.lists(st.integers(min_value=-4, max_value=4), min_size=8, max_size=8),
    )
    @settings(max_examples=25, deadline=None)
    def test_hull_points_connect_inside_the_hull(self, running_polytope, lams1, lams2):
        gens = running_polytope.generators
        x = trop_combination([Fraction(c) for c in lams1], gens)
        y = trop_combination([Fraction(c) for c in lams2], gens)
        assert in_tconv(x, gens) and in_tconv(y, gens)
        for z in trop_segment(x, y):
            assert in_tconv(z, gens)
