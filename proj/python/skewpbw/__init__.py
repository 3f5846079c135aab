# Copyright 2026 The skewpbw Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Skew PBW extensions: normal forms, products, consistency checks and homomorphisms."""

from ._core import (
    Algebra,
    FormatError,
    HomSpec,
    ParseError,
    Poly,
    Presentation,
    SkewPBWError,
    catalog_get,
    catalog_list,
    check,
    check_hom,
    extend_hom,
    homspec_from_json,
    load_homspec,
    load_presentation,
    presentation_from_json,
    verify_mutual_inverse,
)

__all__ = [
    "Algebra",
    "FormatError",
    "HomSpec",
    "ParseError",
    "Poly",
    "Presentation",
    "SkewPBWError",
    "catalog_get",
    "catalog_list",
    "check",
    "check_hom",
    "extend_hom",
    "homspec_from_json",
    "load_homspec",
    "load_presentation",
    "presentation_from_json",
    "verify_mutual_inverse",
]
