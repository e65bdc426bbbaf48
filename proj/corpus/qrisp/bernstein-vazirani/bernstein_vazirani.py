from qrisp import QuantumVariable, QuantumBool, h, x, cx

SECRET = "1101"


def bv_oracle(qv, ancilla, secret):
    for i, bit in enumerate(secret):
        if bit == "1":
            cx(qv[i], ancilla)


def bernstein_vazirani(secret):
    qv = QuantumVariable(len(secret))
    ancilla = QuantumBool()
    x(ancilla)
    h(ancilla)
    h(qv)
    bv_oracle(qv, ancilla, secret)
    h(qv)
    return qv.get_measurement()


result = bernstein_vazirani(SECRET)
print("measured:", result)
print("hidden string recovered:", list(result)[0] == SECRET)
