"""Show phi on a few elements and check that Dist(Fr) undoes it."""
from frobsplit import Hyperalgebra, dist_fr, mu0, phi

for p in (2, 3):
    alg = Hyperalgebra(p)
    print(f"p={p}: mu0 = {mu0(alg)}")
    for text in ("E", "F", "[H;1]", "F^(2) [H;1] E"):
        x = alg.parse(text)
        image = phi(x)
        print(f"  phi({text}) = {image}")
        assert dist_fr(image) == x
