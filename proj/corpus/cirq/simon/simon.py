"""Simon's problem with hidden string 101 on 3 + 3 qubits."""
import itertools

import cirq
import numpy as np

SECRET = [1, 0, 1]
n = len(SECRET)

inputs = cirq.LineQubit.range(n)
outputs = cirq.LineQubit.range(n, 2 * n)


def simon_oracle(secret):
    for i in range(n):
        yield cirq.CNOT(inputs[i], outputs[i])
    pivot = next(i for i, bit in enumerate(secret) if bit)
    for i, bit in enumerate(secret):
        if bit:
            yield cirq.CNOT(inputs[pivot], outputs[i])


circuit = cirq.Circuit(
    cirq.H.on_each(*inputs),
    simon_oracle(SECRET),
    cirq.H.on_each(*inputs),
    cirq.measure(*inputs, key="y"),
)
print(circuit)

result = cirq.Simulator().run(circuit, repetitions=50)
samples = result.measurements["y"]
equations = {tuple(int(b) for b in row) for row in samples if any(row)}
for eq in sorted(equations):
    print("y =", eq)

solutions = []
for guess in itertools.product([0, 1], repeat=n):
    if not any(guess):
        continue
    if all(np.dot(guess, eq) % 2 == 0 for eq in equations):
        solutions.append(guess)

if len(solutions) == 1 and list(solutions[0]) == SECRET:
    print("hidden string:", solutions[0])
elif solutions:
    print("ambiguous, candidates:", solutions)
else:
    print("no consistent string found")
