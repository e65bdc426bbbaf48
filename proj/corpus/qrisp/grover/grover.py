"""Grover search in Qrisp: 3 qubits, marked state 101, two iterations."""
import math

from qrisp import QuantumVariable, h, x, mcx
from qrisp.grover import diffuser, grovers_alg, tag_state

N = 3
MARKED = "101"
ITERATIONS = 2


def oracle(qv):
    tag_state({qv: MARKED})


def manual_oracle(qv):
    for i, bit in enumerate(MARKED):
        if bit == "0":
            x(qv[i])
    h(qv[N - 1])
    mcx(qv[:-1], qv[N - 1])
    h(qv[N - 1])
    for i, bit in enumerate(MARKED):
        if bit == "0":
            x(qv[i])


def run(oracle_function):
    qv = QuantumVariable(N)
    h(qv)
    for _ in range(ITERATIONS):
        oracle_function(qv)
        diffuser(qv)
    return qv.get_measurement()


optimal = round(math.pi / 4 * math.sqrt(2 ** N))
print("optimal iterations:", optimal, "used:", ITERATIONS)

for fn in (oracle, manual_oracle):
    result = run(fn)
    best = max(result, key=result.get)
    print(fn.__name__, "->", best, round(result[best], 3))
    if best != MARKED:
        print("  unexpected winner")

qv = QuantumVariable(N)
grovers_alg(qv, oracle, iterations=ITERATIONS)
final = qv.get_measurement()
top = sorted(final.items(), key=lambda item: -item[1])[:3]
for state, p in top:
    print(state, p)
