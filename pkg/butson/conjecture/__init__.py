# Scaled-power entry classification and conjecture verdicts
