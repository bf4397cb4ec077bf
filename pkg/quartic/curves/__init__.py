"""Short Weierstrass curves over Q and the cubic-model transform."""
