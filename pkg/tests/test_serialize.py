"""Round-trip and diagnostic tests for the JSON layer.

Round trips must be bit-exact: decode(encode(x)) == x for fields, elements,
matrices, parameters, and whole representations.  Malformed documents must
fail with a SchemaError whose path names the offending node.
"""

import copy

import pytest

from heisenmod import (
    GF,
    HeisenbergAlgebra,
    Matrix,
    ModuleParams,
    Poly,
    SchemaError,
    SubspaceBasis,
    build_standard,
    build_V,
    composition_series,
    decode_elem,
    decode_field,
    decode_matrix,
    decode_params,
    decode_representation,
    direct_sum_reps,
    encode_canonical_form,
    encode_elem,
    encode_field,
    encode_invariants,
    encode_matrix,
    encode_params,
    encode_poly,
    encode_representation,
    encode_series,
    encode_subspace,
    find_irreducible,
    frobenius_form,
    invariants,
    make_extension,
)


def ext(p, m):
    return make_extension(p, find_irreducible(p, m))


FIELDS = [GF(2), GF(3), GF(5), ext(2, 2), ext(2, 3), ext(3, 2)]


def params_of(field, alpha, betas, gammas):
    e = field.element
    return ModuleParams(e(alpha), [e(b) for b in betas], [e(g) for g in gammas])


def schema_path(callable_, *args, **kwargs):
    with pytest.raises(SchemaError) as info:
        callable_(*args, **kwargs)
    return info.value.path


# -- fields ------------------------------------------------------------------


def test_field_round_trip():
    for field in FIELDS:
        assert decode_field(encode_field(field)) is field


def test_field_encoding_shape():
    assert encode_field(GF(7)) == {"p": 7}
    doc = encode_field(ext(2, 2))
    assert doc["p"] == 2
    assert doc["modulus"][-1] == 1 and len(doc["modulus"]) == 3


def test_field_decode_diagnostics():
    assert schema_path(decode_field, []) == "$"
    assert schema_path(decode_field, {}) == "$"
    assert schema_path(decode_field, {"p": 6}) == "$.p"
    assert schema_path(decode_field, {"p": "3"}) == "$.p"
    assert schema_path(decode_field, {"p": True}) == "$.p"
    assert schema_path(decode_field, {"p": 3, "extra": 1}) == "$"
    assert schema_path(decode_field, {"p": 2, "modulus": [1]}) == "$.modulus"
    assert schema_path(decode_field, {"p": 2, "modulus": [1, 1, 2]}) == "$.modulus[2]"
    assert schema_path(decode_field, {"p": 2, "modulus": [1, 1, "x"]}) == "$.modulus[2]"
    # X^2 + 1 = (X + 1)^2 over GF(2): reducible modulus
    assert schema_path(decode_field, {"p": 2, "modulus": [1, 0, 1]}) == "$.modulus"
    # non-monic tail
    assert schema_path(decode_field, {"p": 3, "modulus": [1, 1, 2]}) == "$.modulus"
    assert schema_path(decode_field, {"p": 3, "modulus": "bad"}) == "$.modulus"


def test_field_decode_nested_path_prefix():
    assert schema_path(decode_field, {"p": 9}, "$.field") == "$.field.p"


# -- elements ------------------------------------------------------------------


def test_elem_round_trip_every_element():
    for field in FIELDS:
        for e in field.elements():
            doc = encode_elem(e)
            assert decode_elem(field, doc, "$") == e
            if field.modulus is None:
                assert type(doc) is int
            else:
                assert type(doc) is list and len(doc) == field.degree


def test_elem_decode_diagnostics():
    K = ext(3, 2)
    assert schema_path(decode_elem, GF(3), 3, "$.a") == "$.a"
    assert schema_path(decode_elem, GF(3), -1, "$.a") == "$.a"
    assert schema_path(decode_elem, GF(3), [1], "$.a") == "$.a"
    assert schema_path(decode_elem, GF(3), True, "$.a") == "$.a"
    assert schema_path(decode_elem, K, 1, "$.a") == "$.a"
    assert schema_path(decode_elem, K, [1, 2, 0], "$.a") == "$.a"
    assert schema_path(decode_elem, K, [1, 3], "$.a") == "$.a[1]"
    assert schema_path(decode_elem, K, [1, "t"], "$.a") == "$.a[1]"


def test_elem_decode_accepts_short_arrays():
    K = ext(2, 3)
    assert decode_elem(K, [1], "$") == K.one()
    assert decode_elem(K, [], "$") == K.zero()
    assert decode_elem(K, [0, 1], "$") == K.generator()


# -- matrices ------------------------------------------------------------------


def test_matrix_round_trip():
    import random

    rng = random.Random(40)
    for field in FIELDS:
        for _ in range(5):
            r, c = rng.randrange(1, 4), rng.randrange(1, 4)
            m = Matrix(field, r, c, [rng.randrange(field.order) for _ in range(r * c)])
            doc = encode_matrix(m)
            assert decode_matrix(doc) == m


def test_matrix_encoding_shape():
    m = Matrix.from_rows(GF(3), [[0, 1], [2, 0]])
    assert encode_matrix(m) == {
        "field": {"p": 3},
        "rows": 2,
        "cols": 2,
        "entries": [[0, 1], [2, 0]],
    }


def test_matrix_decode_diagnostics():
    good = encode_matrix(Matrix.from_rows(GF(3), [[0, 1], [2, 0]]))

    def corrupt(mutate):
        doc = copy.deepcopy(good)
        mutate(doc)
        return schema_path(decode_matrix, doc)

    assert schema_path(decode_matrix, 7) == "$"
    assert corrupt(lambda d: d.pop("rows")) == "$"
    assert corrupt(lambda d: d.__setitem__("rows", "2")) == "$.rows"
    assert corrupt(lambda d: d.__setitem__("rows", -1)) == "$"
    assert corrupt(lambda d: d["field"].__setitem__("p", 4)) == "$.field.p"
    assert corrupt(lambda d: d.__setitem__("entries", [[0, 1]])) == "$.entries"
    assert corrupt(lambda d: d["entries"].__setitem__(1, [2])) == "$.entries[1]"
    assert corrupt(lambda d: d["entries"][0].__setitem__(1, 3)) == "$.entries[0][1]"
    assert corrupt(lambda d: d["entries"][1].__setitem__(0, None)) == "$.entries[1][0]"


def test_matrix_over_extension_round_trip():
    K = ext(2, 2)
    m = Matrix(K, 2, 2, [0, 1, 2, 3])
    doc = encode_matrix(m)
    assert doc["entries"] == [[[0, 0], [1, 0]], [[0, 1], [1, 1]]]
    assert decode_matrix(doc) == m


# -- representations ---------------------------------------------------------------


def test_representation_round_trip():
    cases = [
        build_V(HeisenbergAlgebra(1, GF(3)), params_of(GF(3), 1, [0], [2])),
        build_V(HeisenbergAlgebra(2, GF(2)), params_of(GF(2), 1, [0, 1], [1, 0])),
        build_standard(HeisenbergAlgebra(2, GF(5))),
        build_V(HeisenbergAlgebra(1, ext(2, 2)), params_of(ext(2, 2), 2, [1], [3])),
    ]
    for rep in cases:
        doc = encode_representation(rep)
        back = decode_representation(doc)
        assert back == rep


def test_representation_decode_diagnostics():
    rep = build_V(HeisenbergAlgebra(2, GF(2)), params_of(GF(2), 1, [0, 1], [1, 0]))
    good = encode_representation(rep)

    def corrupt(mutate):
        doc = copy.deepcopy(good)
        mutate(doc)
        return schema_path(decode_representation, doc)

    assert corrupt(lambda d: d.pop("z")) == "$"
    assert corrupt(lambda d: d.__setitem__("n", 0)) == "$.n"
    assert corrupt(lambda d: d.__setitem__("x", d["x"][:1])) == "$.x"
    assert corrupt(lambda d: d["x"][0]["entries"][0].__setitem__(1, 2)) == (
        "$.x[0].entries[0][1]"
    )
    assert corrupt(lambda d: d["y"][1].__setitem__("field", {"p": 3})) == (
        "$.y[1].field"
    )
    # switching the inner field to GF(4) breaks the integer entries first
    assert (
        corrupt(lambda d: d["y"][1]["field"].__setitem__("modulus", [1, 1, 1]))
        == "$.y[1].entries[0][0]"
    )
    # z is the reference size, so a resized z flags the first x block
    assert corrupt(
        lambda d: d.__setitem__("z", encode_matrix(Matrix.identity(GF(2), 3)))
    ) == "$.x[0]"
    assert corrupt(
        lambda d: d.__setitem__("z", encode_matrix(Matrix.zeros(GF(2), 4, 3)))
    ) == "$.z"


# -- parameters -----------------------------------------------------------------


def test_params_round_trip():
    for field in FIELDS:
        params = params_of(field, 1, [0, 1], [1, 0])
        doc = encode_params(params)
        assert decode_params(field, doc) == params


def test_params_decode_diagnostics():
    field = GF(3)
    good = {"alpha": 1, "betas": [0, 1], "gammas": [2, 0]}
    assert decode_params(field, good) == params_of(field, 1, [0, 1], [2, 0])
    assert schema_path(decode_params, field, []) == "$"
    assert schema_path(decode_params, field, {"alpha": 1, "betas": [0]}) == "$"
    assert (
        schema_path(decode_params, field, {"alpha": 3, "betas": [0], "gammas": [0]})
        == "$.alpha"
    )
    assert (
        schema_path(decode_params, field, {"alpha": 1, "betas": [], "gammas": []})
        == "$.betas"
    )
    assert (
        schema_path(decode_params, field, {"alpha": 1, "betas": [0, 3], "gammas": [0, 0]})
        == "$.betas[1]"
    )
    assert (
        schema_path(decode_params, field, {"alpha": 1, "betas": [0, 1], "gammas": [0]})
        == "$"
    )
    # alpha = 0 passes element decoding but breaks the parameter contract
    assert (
        schema_path(decode_params, field, {"alpha": 0, "betas": [0], "gammas": [0]})
        == "$"
    )


# -- derived encodings -------------------------------------------------------------


def test_encode_invariants_shape():
    field = GF(3)
    inv = invariants(build_V(HeisenbergAlgebra(1, field), params_of(field, 2, [1], [2])))
    doc = encode_invariants(inv)
    assert doc == {"alpha": 2, "deltas": [1], "epsilons": [2]}


def test_encode_poly_lists_all_coefficients():
    field = GF(5)
    assert encode_poly(Poly(field, [3, 0, 1])) == [3, 0, 1]
    assert encode_poly(Poly(field, [])) == []
    K = ext(2, 2)
    assert encode_poly(Poly(K, [2, 1])) == [[0, 1], [1, 0]]


def test_encode_canonical_form():
    m = Matrix.from_rows(GF(3), [[1, 0, 0], [0, 1, 1], [0, 0, 1]])
    cf = frobenius_form(m)
    doc = encode_canonical_form(cf)
    polys = doc["invariant_factors"]
    assert all(f[-1] == 1 for f in polys)  # monic, ascending coefficients
    assert decode_matrix(doc["transform"]) == cf.transform


def test_encode_series():
    field = GF(3)
    rep = direct_sum_reps(
        [
            build_V(HeisenbergAlgebra(1, field), params_of(field, 1, [0], [0])),
            build_V(HeisenbergAlgebra(1, field), params_of(field, 2, [1], [1])),
        ]
    )
    doc = encode_series(composition_series(rep))
    assert doc["chain_dims"] == [0, 3, 6]
    assert len(doc["factors"]) == 2
    for f in doc["factors"]:
        assert f["dim"] == 3 and f["faithful"] is True
        assert set(f["invariants"]) == {"alpha", "deltas", "epsilons"}
    # a factor that kills z reports null invariants
    doc2 = encode_series(composition_series(build_standard(HeisenbergAlgebra(1, field))))
    assert [f["invariants"] for f in doc2["factors"]] == [None, None, None]


def test_encode_subspace():
    field = GF(3)
    space = SubspaceBasis(field, 3, [[1, 2, 0], [0, 1, 1]])
    doc = encode_subspace(space)
    assert doc == [list(v) for v in space.vectors]
    assert encode_subspace(SubspaceBasis(field, 3, [])) == []


def test_documents_survive_json_text():
    import json

    rep = build_V(HeisenbergAlgebra(1, ext(2, 2)), params_of(ext(2, 2), 2, [1], [3]))
    text = json.dumps(encode_representation(rep))
    assert decode_representation(json.loads(text)) == rep
