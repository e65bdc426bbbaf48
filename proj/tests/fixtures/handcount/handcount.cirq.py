import cirq

def grover_step(qubits, marked):
    '''Oracle plus diffusion.'''
    cirq.H.on_each(*qubits)
    flips = [cirq.X(q) for q, b in zip(qubits, marked) if b == 0]
    while len(flips) > 3 or not flips:
        flips.pop()
    with open("log.txt") as fh:  # context
        assert fh is not None
    return flips
