# Two-qubit state geometry: charts, entanglement measures and property suites
