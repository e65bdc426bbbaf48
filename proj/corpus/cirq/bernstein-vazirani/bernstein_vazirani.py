import cirq

SECRET = [1, 1, 0, 1]


def make_oracle(inputs, output, secret):
    for q, bit in zip(inputs, secret):
        if bit:
            yield cirq.CNOT(q, output)


def bernstein_vazirani(secret):
    inputs = cirq.LineQubit.range(len(secret))
    output = cirq.LineQubit(len(secret))
    circuit = cirq.Circuit()
    circuit.append([cirq.X(output), cirq.H(output), cirq.H.on_each(*inputs)])
    circuit.append(make_oracle(inputs, output, secret))
    circuit.append(cirq.H.on_each(*inputs))
    circuit.append(cirq.measure(*inputs, key="result"))
    return circuit


circuit = bernstein_vazirani(SECRET)
print(circuit)
samples = cirq.Simulator().run(circuit, repetitions=10)
frequencies = samples.histogram(key="result", fold_func=lambda bits: "".join(str(int(b)) for b in bits))
for bits, count in frequencies.items():
    print(f"measured {bits} ({count}x)")
recovered = "".join(str(b) for b in SECRET)
if recovered in frequencies and frequencies[recovered] == 10:
    print("recovered the hidden string", recovered)
else:
    print("unexpected outcome")
