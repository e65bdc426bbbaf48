"""Grover's search with Cirq: 3 qubits, marked state 101, two iterations."""
import math
import random

import cirq

N = 3
MARKED = [1, 0, 1]
ITERATIONS = 2


def set_io_qubits(qubit_count):
    inputs = [cirq.GridQubit(i, 0) for i in range(qubit_count)]
    output = cirq.GridQubit(qubit_count, 0)
    return inputs, output


def make_oracle(inputs, output, marked):
    yield [cirq.X(q) for q, bit in zip(inputs, marked) if not bit]
    yield cirq.X(output).controlled_by(*inputs)
    yield [cirq.X(q) for q, bit in zip(inputs, marked) if not bit]


def diffusion(inputs):
    yield cirq.H.on_each(*inputs)
    yield cirq.X.on_each(*inputs)
    yield cirq.H(inputs[-1])
    yield cirq.X(inputs[-1]).controlled_by(*inputs[:-1])
    yield cirq.H(inputs[-1])
    yield cirq.X.on_each(*inputs)
    yield cirq.H.on_each(*inputs)


def make_grover_circuit(inputs, output, oracle, iterations):
    c = cirq.Circuit()
    c.append([cirq.X(output), cirq.H(output), cirq.H.on_each(*inputs)])
    for _ in range(iterations):
        c.append(oracle)
        c.append(diffusion(inputs))
    c.append(cirq.measure(*inputs, key="result"))
    return c


def bitstring(bits):
    return "".join(str(int(b)) for b in bits)


inputs, output = set_io_qubits(N)
oracle = list(make_oracle(inputs, output, MARKED))
circuit = make_grover_circuit(inputs, output, oracle, ITERATIONS)
print("Circuit:")
print(circuit)

if ITERATIONS != math.floor(math.pi / 4 * math.sqrt(2 ** N)):
    print("warning: iteration count differs from the optimum")

simulator = cirq.Simulator(seed=random.randint(0, 1000))
result = simulator.run(circuit, repetitions=100)
frequencies = result.histogram(key="result", fold_func=bitstring)
print("Sampled results:\n{}".format(frequencies))

most_common = frequencies.most_common(1)[0][0]
print("Most common bitstring: {}".format(most_common))
if most_common == bitstring(MARKED):
    print("Found a match: {}".format(most_common == bitstring(MARKED)))
elif frequencies[bitstring(MARKED)] > 0:
    print("marked state sampled, but not dominant")
else:
    print("marked state never sampled")
