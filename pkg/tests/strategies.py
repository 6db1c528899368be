"""Shared hypothesis strategies."""
from hypothesis import strategies as st

from artgallery.oracle import random_simple

seeds = st.integers(0, 2**32 - 1)
small_polygons = st.builds(random_simple, st.integers(4, 10), seeds)
polygons = st.builds(random_simple, st.integers(4, 14), seeds)
