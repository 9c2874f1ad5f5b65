"""Fill distances shrink when geometry is measured between sorted points."""
import numpy as np

from sortkern import Domain, cube_corners, fill_distance_estimate
from sortkern.rng import stream

d = 6
candidates = np.vstack([stream(1, d).random((100000, d)), cube_corners(d)])

print(" n   h(plain)  h(sorted)")
for n in (50, 500, 5000):
    X = stream(2, d, n).random((n, d))
    h = fill_distance_estimate(X, Domain.CUBE, candidates)
    hs = fill_distance_estimate(X, Domain.SORTED_SIMPLEX, candidates)
    # sorting both design and candidates can only bring them closer
    print(f"{n:4d}   {h:.4f}    {hs:.4f}")
