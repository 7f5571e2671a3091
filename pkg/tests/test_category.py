"""Finite categories: axiom checking, builders, JSON format, chain counts."""

import pytest
from hypothesis import given, strategies as st

from catzeta import (
    CategoryFormatError,
    FiniteCategory,
    IntMatrix,
    Morphism,
    StructureError,
    adjacency,
    category_from_dict,
    category_to_dict,
    chain_count,
    check_structure,
    discrete,
    disjoint_union,
    enumerate_chains,
    monoid_delooping,
    poset_category,
    product,
    validate,
)

small_matrices = st.integers(min_value=0, max_value=4).flatmap(
    lambda n: st.lists(
        st.lists(st.integers(min_value=-3, max_value=3), min_size=n, max_size=n),
        min_size=n, max_size=n,
    )
).map(IntMatrix)


class TestFixtures:
    def test_all_fixtures_satisfy_axioms(self, fixture_categories):
        for name, c in fixture_categories.items():
            report = validate(c)
            assert report.ok, (name, report.violations)

    def test_adjacency_matrices(self, fixture_categories):
        expected = {
            "terminal": [[1]],
            "p2": [[1, 1], [0, 1]],
            "s": [[1, 2], [0, 1]],
            "z2": [[2]],
            "k2": [[1, 1], [1, 1]],
        }
        for name, rows in expected.items():
            assert adjacency(fixture_categories[name]) == IntMatrix(rows)

    def test_morphism_lookup_and_hom_count(self, fixture_categories):
        p2 = fixture_categories["p2"]
        f = p2.morphism("f")
        assert (f.src, f.tgt) == ("x", "y")
        assert p2.hom_count("x", "y") == 1
        assert p2.hom_count("y", "x") == 0
        assert fixture_categories["s"].hom_count("x", "y") == 2
        with pytest.raises(KeyError):
            p2.morphism("nope")


class TestIntMatrix:
    def test_must_be_square(self):
        with pytest.raises(ValueError):
            IntMatrix([[1, 2]])

    def test_identity_and_indexing(self):
        e = IntMatrix.identity(3)
        assert e[0, 0] == 1 and e[0, 1] == 0
        assert e.trace() == 3
        assert e.entry_sum() == 3

    @given(small_matrices)
    def test_power_matches_repeated_matmul(self, a):
        acc = IntMatrix.identity(a.n)
        for m in range(4):
            assert a.power(m) == acc
            acc = acc @ a

    @given(small_matrices)
    def test_identity_is_neutral(self, a):
        e = IntMatrix.identity(a.n)
        assert a @ e == a
        assert e @ a == a

    def test_matmul_example(self):
        a = IntMatrix([[1, 2], [3, 4]])
        b = IntMatrix([[0, 1], [1, 0]])
        assert a @ b == IntMatrix([[2, 1], [4, 3]])

    def test_permuted_is_conjugation(self):
        a = IntMatrix([[1, 2], [3, 4]])
        b = a.permuted([1, 0])
        assert b == IntMatrix([[4, 3], [2, 1]])
        assert b.trace() == a.trace()
        assert b.entry_sum() == a.entry_sum()

    def test_negative_power_rejected(self):
        with pytest.raises(ValueError):
            IntMatrix.identity(2).power(-1)


class TestChainCounting:
    def test_zero_chains_count_objects(self, fixture_categories):
        for c in fixture_categories.values():
            assert chain_count(adjacency(c), 0) == len(c.objects)
            assert enumerate_chains(c, 0) == len(c.objects)

    def test_enumeration_matches_matrix_powers(self, fixture_categories):
        for c in fixture_categories.values():
            a = adjacency(c)
            for m in range(5):
                assert enumerate_chains(c, m) == chain_count(a, m)

    def test_known_counts(self, fixture_categories):
        a = adjacency(fixture_categories["p2"])
        assert [chain_count(a, m) for m in range(1, 5)] == [3, 4, 5, 6]
        a = adjacency(fixture_categories["k2"])
        assert [chain_count(a, m) for m in range(1, 5)] == [4, 8, 16, 32]

    def test_enumeration_cap(self, fixture_categories):
        with pytest.raises(ValueError, match="chain_count"):
            enumerate_chains(fixture_categories["k2"], 9, cap=5)


class TestStructureAndAxioms:
    def test_dangling_identity_raises(self):
        c = FiniteCategory(("x",), (Morphism("id_x", "x", "x"),),
                           {"x": "ghost"}, {})
        with pytest.raises(StructureError):
            check_structure(c)

    def test_duplicate_morphism_raises(self):
        c = FiniteCategory(("x",),
                           (Morphism("id_x", "x", "x"), Morphism("id_x", "x", "x")),
                           {"x": "id_x"}, {})
        with pytest.raises(StructureError):
            validate(c)

    def test_totality_violation_reported(self, fixture_categories):
        doc = category_to_dict(fixture_categories["k2"])
        doc["compose"] = [t for t in doc["compose"] if t[:2] != ["g", "f"]]
        report = validate(category_from_dict(doc))
        assert any("totality" in v and "(g, f)" in v for v in report.violations)

    def test_closure_violation_reported(self, fixture_categories):
        doc = category_to_dict(fixture_categories["k2"])
        doc["compose"] = [t if t[:2] != ["g", "f"] else ["g", "f", "f"]
                          for t in doc["compose"]]
        report = validate(category_from_dict(doc))
        assert any("closure" in v for v in report.violations)

    def test_identity_law_violation_reported(self):
        doc = {
            "objects": ["x"],
            "morphisms": [{"id": "e", "src": "x", "tgt": "x"},
                          {"id": "s", "src": "x", "tgt": "x"}],
            "identity": {"x": "e"},
            "compose": [["s", "s", "e"], ["s", "e", "e"]],
        }
        report = validate(category_from_dict(doc))
        assert any("identity" in v for v in report.violations)

    def test_associativity_violation_reported(self):
        # Z/3 table corrupted at one non-identity product.
        doc = {
            "objects": ["x"],
            "morphisms": [{"id": "e", "src": "x", "tgt": "x"},
                          {"id": "a", "src": "x", "tgt": "x"},
                          {"id": "b", "src": "x", "tgt": "x"}],
            "identity": {"x": "e"},
            "compose": [["a", "a", "b"], ["a", "b", "b"], ["b", "a", "e"],
                        ["b", "b", "a"]],
        }
        report = validate(category_from_dict(doc))
        assert any("associativity" in v for v in report.violations)


class TestBuilders:
    def test_discrete(self):
        c = discrete(3)
        assert validate(c).ok
        assert adjacency(c) == IntMatrix.identity(3)
        assert validate(discrete(0)).ok

    def test_poset_chain(self):
        c = poset_category([[1, 1, 1], [0, 1, 1], [0, 0, 1]])
        assert validate(c).ok
        assert adjacency(c) == IntMatrix([[1, 1, 1], [0, 1, 1], [0, 0, 1]])
        assert c.morphism("0<=2").tgt == "2"

    def test_poset_rejects_bad_relations(self):
        with pytest.raises(ValueError, match="reflexive"):
            poset_category([[0]])
        with pytest.raises(ValueError, match="antisymmetric"):
            poset_category([[1, 1], [1, 1]])
        with pytest.raises(ValueError, match="transitive"):
            poset_category([[1, 1, 0], [0, 1, 1], [0, 0, 1]])

    def test_monoid_delooping_z2(self):
        c = monoid_delooping([[0, 1], [1, 0]], names=["e", "s"])
        assert validate(c).ok
        assert adjacency(c) == IntMatrix([[2]])
        assert c.compose[("s", "s")] == "e"

    def test_monoid_identity_found_anywhere(self):
        # identity is element 1 here
        c = monoid_delooping([[1, 0], [0, 1]])
        assert validate(c).ok
        assert c.identity["*"] == "g1"

    def test_monoid_rejections(self):
        with pytest.raises(ValueError, match="identity"):
            monoid_delooping([[1, 1], [1, 1]])
        with pytest.raises(ValueError, match="associative"):
            monoid_delooping([[0, 1, 2], [1, 0, 0], [2, 2, 1]])
        with pytest.raises(ValueError, match="names"):
            monoid_delooping([[0, 1], [1, 0]], names=["e"])

    def test_disjoint_union_blocks(self, fixture_categories):
        u = disjoint_union(fixture_categories["p2"], fixture_categories["z2"])
        assert validate(u).ok
        assert adjacency(u) == IntMatrix([[1, 1, 0], [0, 1, 0], [0, 0, 2]])

    def test_product_kronecker(self, fixture_categories):
        p2 = fixture_categories["p2"]
        sq = product(p2, p2)
        assert validate(sq).ok
        a = adjacency(sq)
        assert a.n == 4
        # chain counts multiply across a product
        ap = adjacency(p2)
        for m in range(4):
            assert chain_count(a, m) == chain_count(ap, m) ** 2


class TestJsonFormat:
    def test_roundtrip(self, fixture_categories):
        for name, c in fixture_categories.items():
            doc = category_to_dict(c)
            again = category_to_dict(category_from_dict(doc))
            assert doc == again, name

    def test_identity_pairs_omitted_from_serialization(self, fixture_categories):
        doc = category_to_dict(fixture_categories["z2"])
        assert doc["compose"] == [["s", "s", "e"]]

    def test_identity_pairs_filled_on_parse(self):
        c = category_from_dict({
            "objects": ["x"],
            "morphisms": [{"id": "e", "src": "x", "tgt": "x"},
                          {"id": "s", "src": "x", "tgt": "x"}],
            "identity": {"x": "e"},
            "compose": [["s", "s", "e"]],
        })
        assert c.compose[("s", "e")] == "s"
        assert c.compose[("e", "s")] == "s"
        assert c.compose[("e", "e")] == "e"

    @pytest.mark.parametrize("mutate, location", [
        (lambda d: d.pop("identity"), "$"),
        (lambda d: d["objects"].append("x"), "objects"),
        (lambda d: d["morphisms"].append({"id": "f"}), "morphisms[2]"),
        (lambda d: d["morphisms"].append({"id": "q", "src": "x", "tgt": "ghost"}),
         "morphisms[2]"),
        (lambda d: d["identity"].update({"x": "ghost"}), "identity['x']"),
        (lambda d: d["compose"].append(["s", "s", "ghost"]), "compose[1]"),
        (lambda d: d["compose"].append(["s", "s", "e"]), "compose[1]"),
    ])
    def test_malformed_documents_report_location(self, mutate, location):
        doc = {
            "objects": ["x"],
            "morphisms": [{"id": "e", "src": "x", "tgt": "x"},
                          {"id": "s", "src": "x", "tgt": "x"}],
            "identity": {"x": "e"},
            "compose": [["s", "s", "e"]],
        }
        mutate(doc)
        with pytest.raises(CategoryFormatError) as exc:
            category_from_dict(doc)
        assert exc.value.location == location

    def test_non_composable_pair_rejected(self, fixture_categories):
        doc = category_to_dict(fixture_categories["p2"])
        doc["compose"] = [["f", "f", "f"]]
        with pytest.raises(CategoryFormatError, match="composable"):
            category_from_dict(doc)

    def test_missing_pair_parses_but_fails_validation(self, fixture_categories):
        doc = category_to_dict(fixture_categories["z2"])
        doc["compose"] = []
        c = category_from_dict(doc)
        report = validate(c)
        assert not report.ok
        assert any("totality" in v for v in report.violations)
