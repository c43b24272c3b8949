"""Chern classes on P^n and the symmetric-function identity.

Run: python demos/chow_ring.py
"""

from logchern import chow

# c(T P^3) = (1+h)^4; its degree is chi(P^3).
T = chow.tangent_class(3)
print("c(T P^3)      =", T)
print("chi(P^3)      =", chow.integrate(T))

# Log cotangent class for a plane and a quadric.
log = chow.log_chern_class(3, [1, 2])
print("c(Omega(log)) =", log)
print("top           =", log.top(), "= sigma_3(0, 1) =", chow.complete_symmetric(3, [0, 1]))

# A single smooth cubic surface: the log class and the twisted tangent class
# differ by the sign (-1)^n.
print("log top, d=3  =", chow.log_chern_class(3, [3]).top())
print("c_3(T(-3))    =", chow.twisted_top_chern(3, 3))

# Chern integrals over complete intersections.
for degrees in ([1], [2], [3], [1, 2], [1, 3]):
    print(f"int over Z{degrees} =", chow.chern_integral(3, degrees))
