# Spectra of the unitary matrix associated with a BH matrix
