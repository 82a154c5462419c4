"""Walk through one field: K = Q(sqrt(n * eps0 * sqrt l)) with n = 2*71*83, l = 97."""
from quarticrank.basefield import make_basefield
from quarticrank.quarticfield import make_quarticfield, ramification_profile
from quarticrank.rank import rank_closed_form, rank_generic, symbol_matrix, CASE_TABLE

k = make_basefield(97)
print(f"k = Q(sqrt {k.l}): eps0 = {k.u} + {k.v} sqrt {k.l}, norm {k.unit.norm(k.l)}")
print(f"l = {k.squares.b}^2 + {k.squares.c}^2, (2/l)_4 = {k.two_quartic}, "
      f"(-1)^((l-1)/8) = {k.eighth}")

K = make_quarticfield(2 * 71 * 83, k)
# n even: the 2 is folded into the canonical form, so a = n/2 and c replaces b
print(f"canonical form a = {K.a}, b = {K.b_used}, conductor 2^{K.e} * {K.a} * {K.l} = {K.conductor}")

prof = ramification_profile(K)
print("ramified primes of k:", [(kind.value, p) for kind, p in prof.places], "mu =", prof.mu)

M = symbol_matrix(K)
header = " ".join(f"{c.kind.value[:5]}:{c.prime}" + ("'" if c.conjugate else "") for c in M.columns)
print(header)
for name, row in M.rows().items():
    print(f"{name:>6}", " ".join(e.value for e in row))

g, c = rank_generic(K), rank_closed_form(K)
print(f"generic: mu={g.mu} r*={g.r_star} rank={g.rank}")
print(f"closed : rank={c.rank} via {c.case_id}  [{CASE_TABLE[c.case_id][1]}]")
