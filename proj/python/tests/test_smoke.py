# Copyright 2026 The convmacw Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import pathlib

import pytest

import convmacw

DATA = pathlib.Path(os.environ.get(
    "CONVMACW_TEST_DATA",
    pathlib.Path(__file__).resolve().parents[2] / "tests" / "data"))


@pytest.fixture
def binary():
    return convmacw.load(DATA / "binary_5_2_3.json")


@pytest.fixture
def ternary():
    return convmacw.load(DATA / "ternary_3_2_2.json")


def test_info(binary):
    info = convmacw.info(binary)
    assert info["profile"]["forney"] == [3, 0]
    assert info["r_hat"] == 3
    assert info["dim_c_const"] == 1


def test_adjacency(binary):
    adj = convmacw.adjacency(binary, oracle=True)
    assert adj["delta"] == 3
    assert len(adj["entries"]) == 16
    first = adj["entries"][0]
    assert (first["row"], first["col"], first["we"]) == (0, 0, [1, 0, 0, 1])
    assert convmacw.adjacency_text(binary).startswith("1 + W^3")


def test_dual_round_trip(binary):
    dual = convmacw.dual(binary)
    assert len(dual["generator"]) == 3
    assert convmacw.same_code(dual, {"field": binary["field"],
                                     "generator": binary["dual_generator"]})
    again = convmacw.dual(dual)
    assert convmacw.same_code(again, binary)


def test_verify_theorem_route(binary):
    report = convmacw.verify(binary)
    assert report["verdict"] == "verified"
    assert report["theorem_used"] == "r_hat=delta"
    assert report["witness"] == [[1, 0, 1], [1, 0, 0], [0, 1, 0]]
    assert report["elapsed_ms"] == 0


def test_verify_search_and_witness(ternary):
    report = convmacw.verify(ternary, check_witness=[[1, 1], [1, 2]])
    assert report["verdict"] == "verified"
    assert report["theorem_used"] == "conjecture-search"
    rejected = convmacw.verify(ternary, mode="weak", check_witness="[[1,0],[0,1]]")
    assert rejected["verdict"] == "witness-rejected"
    found = convmacw.search_p(ternary)
    assert found["witness"] is not None and not found["exhausted"]


def test_errors(ternary):
    with pytest.raises(convmacw.PreconditionError):
        convmacw.verify(ternary, mode="theorem-q")
    with pytest.raises(convmacw.GuardExceeded):
        convmacw.verify(ternary, limit=10)
    with pytest.raises(convmacw.ParseError):
        convmacw.info({"field": {"p": 2}, "generator": [["1+z^"]]})
    with pytest.raises(ValueError):
        convmacw.normalize_polynomial("1+2z", 2)


def test_macw_and_polynomials():
    grid = convmacw.macw_exponents(2, delta=2)
    assert grid == [[0, 0, 0, 0], [0, 1, 0, 1], [0, 0, 1, 1], [0, 1, 1, 0]]
    assert convmacw.normalize_polynomial(" z^3 + 1 + z ", 2) == "1+z+z^3"
    assert convmacw.normalize_polynomial("[0,1]z", 2, 2, [1, 1, 1]) == "[0,1]z"
