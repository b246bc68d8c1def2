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
"""Weight adjacency matrices and MacWilliams duality for convolutional codes.

Code documents are dicts (or JSON strings) of the form
``{"field": {"p": 2}, "generator": [["1+z", "1"]], "dual_generator": ...}``.
"""

import json
import os

from . import _convmacw as _core
from ._convmacw import (
    DEFAULT_LIMIT,
    DomainError,
    GuardExceeded,
    IdentityViolation,
    ParseError,
    PreconditionError,
    UsageError,
)

__all__ = [
    "DEFAULT_LIMIT",
    "DomainError",
    "GuardExceeded",
    "IdentityViolation",
    "ParseError",
    "PreconditionError",
    "UsageError",
    "adjacency",
    "adjacency_text",
    "dual",
    "info",
    "load",
    "macw_exponents",
    "normalize_polynomial",
    "same_code",
    "search_p",
    "verify",
]


def _text(document):
    if isinstance(document, (dict, list)):
        return json.dumps(document)
    return document


def load(path):
    """Reads a code document from a JSON file."""
    with open(os.fspath(path), encoding="utf-8") as fh:
        return json.load(fh)


def info(document):
    return json.loads(_core.info(_text(document)))


def adjacency(document, oracle=False, limit=DEFAULT_LIMIT):
    """Sparse adjacency matrix: states in lexicographic order, zero entries omitted."""
    return json.loads(_core.adjacency(_text(document), oracle, limit))


def adjacency_text(document, limit=DEFAULT_LIMIT):
    return _core.adjacency_text(_text(document), limit)


def dual(document):
    return json.loads(_core.dual(_text(document)))


def same_code(a, b):
    return _core.same_code(_text(a), _text(b))


def verify(document, mode="auto", check_witness=None, zeta_exponent=1,
           limit=DEFAULT_LIMIT, timings=False):
    if check_witness is not None and not isinstance(check_witness, str):
        check_witness = json.dumps(check_witness)
    return json.loads(_core.verify(_text(document), mode, check_witness,
                                   zeta_exponent, limit, timings))


def search_p(document, limit=DEFAULT_LIMIT):
    return json.loads(_core.search_p(_text(document), limit))


def macw_exponents(p, s=1, modulus=(), delta=1, zeta_exponent=1):
    """Exponents e with entry (X, Y) of the unnormalized matrix equal to zeta^e."""
    return _core.macw_exponents(p, s, list(modulus), delta, zeta_exponent)


def normalize_polynomial(text, p, s=1, modulus=()):
    return _core.normalize_polynomial(text, p, s, list(modulus))
