# Exhaustive circulant search
