"""The splitting of P^1 on binary forms: degree 2p down to degree 2, and sigma."""
from frobsplit import flagsplit


def show(form):
    n = len(form) - 1
    terms = [("" if c == 1 else f"{c} ") + f"x^{k} y^{n - k}" for k, c in enumerate(form) if c]
    return " + ".join(terms) or "0"


p = 3
split = flagsplit.psi_A(p, 2 * p)
for k in range(2 * p + 1):
    f = flagsplit.monomial(k, 2 * p)
    print(f"Psi({show(f)}) = {show(split @ f % p)}")

sigma = flagsplit.sigma_degree(p, 1)
for k in range(p - 1 + p + 1):
    f = flagsplit.monomial(k, p - 1 + p)
    print(f"sigma({show(f)}) = {show(sigma @ f % p)}")

print("Theta witness:", flagsplit.theta_equivariance_witness(p))
print("all sigma checks:", flagsplit.sigma_checks(p, 3 * p)["ok"])
