# -*- coding: utf-8 -*-
#############################################################################
#
# tbk, the tropical bundle kit, Copyright (C) 2026, the tbk developers.
#
# This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU General Public License for more details.
#
#############################################################################
import os
BASE_DIR = os.path.dirname(__file__)
TEST_DIR = os.path.join(BASE_DIR, 'data')
TEMP_DIR = os.path.join(BASE_DIR, 'tmp')
EXAMPLES_DIR = os.path.normpath(os.path.join(BASE_DIR, os.pardir, os.pardir,
                                             'share', 'tbk', 'examples'))
FANO_BUNDLE = os.path.join(EXAMPLES_DIR, 'fano-bundle.json')
VAMOS_P1 = os.path.join(EXAMPLES_DIR, 'vamos-p1.json')
U23_ZERO = os.path.join(EXAMPLES_DIR, 'u23-zero.json')
FANO_SECTIONS = os.path.join(TEST_DIR, 'fano_sections_1_0.json')
U23_TOTALS = os.path.join(TEST_DIR, 'u23_zero_totals.json')
FANO_DIAGRAM_CSV = os.path.join(TEST_DIR, 'fano_diagram.csv')
VAMOS_EXTENSIONS = os.path.join(TEST_DIR, 'vamos_extensions.json')
FANO_DIAGRAM = [[2, 0, 0, 1, 0, 0, 1],
                [0, 2, 0, 0, 1, 0, 1],
                [0, 0, 2, 0, 0, 1, 1]]
