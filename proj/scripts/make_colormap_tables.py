#!/usr/bin/env python3
# Copyright 2026 The Fraqtal Authors.

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http://www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates include/fraqtal/colormap_tables.hpp from matplotlib's
listed colormap data (viridis, magma, plasma). Turbo and rainbow are
computed analytically in colormap.hpp and need no baked table."""

import os

from matplotlib import colormaps

NAMES = ["viridis", "magma", "plasma"]
OUT = os.path.join(os.path.dirname(__file__), "..", "include", "fraqtal",
                   "colormap_tables.hpp")

HEADER = """\
// Copyright 2026 The Fraqtal Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generated by scripts/make_colormap_tables.py -- do not edit by hand.
#pragma once

#include <array>
#include <cstdint>

namespace fraqtal::detail {

using CmapTable = std::array<std::array<std::uint8_t, 3>, 256>;

"""

FOOTER = "}  // namespace fraqtal::detail\n"


def emit_table(f, name, cmap):
    colors = cmap.colors
    assert len(colors) == 256, name
    f.write(f"inline constexpr CmapTable k{name.capitalize()}Table = {{{{\n")
    for i in range(0, 256, 6):
        row = colors[i:i + 6]
        cells = ", ".join(
            "{%d, %d, %d}" % tuple(round(255 * ch) for ch in rgb[:3])
            for rgb in row)
        f.write("    " + cells + ",\n")
    f.write("}};\n\n")


def main():
    with open(OUT, "w") as f:
        f.write(HEADER)
        for name in NAMES:
            emit_table(f, name, colormaps[name])
        f.write(FOOTER)
    print("wrote", os.path.normpath(OUT))


if __name__ == "__main__":
    main()
