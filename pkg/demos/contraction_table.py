"""Print the SL2 contraction examples: composition factors before and after contracting."""
from frobsplit import composition_factors, contract, dual_weyl, frobenius_twist, simple, steinberg, tensor


def factors(m):
    fac = composition_factors(m)
    return ", ".join(f"L({w[0]})" + (f"^{c}" if c > 1 else "") for w, c in sorted(fac.items(), reverse=True)) or "0"


for p in (2, 3, 5, 7):
    m = dual_weyl(p, p)
    print(f"p={p}: nabla({p}) = [{factors(m)}]  ->  contracted [{factors(contract(m))}]")

for p in (2, 3, 5):
    for name, m in (("nabla(1)", dual_weyl(1, p)), ("nabla(2)", dual_weyl(2, p)), ("L(2)", simple(2, p))):
        c = contract(tensor(steinberg(p), frobenius_twist(m)))
        print(f"p={p}: St (x) {name}^[1] contracted -> [{factors(c)}]")
