"""
Demo Datasets
=============

Reference matrices and domain samples used in the documentation and tests.
"""
from ._base import load_line
from ._base import load_unit_square
from ._base import load_triangle_violation
from ._base import load_great_circle
from ._base import load_inversion_example
from ._base import random_domain_sample
from ._base import random_annulus_sample
