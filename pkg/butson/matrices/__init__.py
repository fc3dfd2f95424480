# Butson-Hadamard matrices as exponent matrices
