# Copyright 2026 The postdist Authors
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


"""Distances between postselected quantum channels."""

from ._postdist import *  # noqa: F401,F403
from ._postdist import (  # noqa: F401
    CapacityError,
    Channel,
    Error,
    InvalidInputError,
    NumericalDegeneracyError,
    ParameterError,
    ParseError,
    ValidityError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
