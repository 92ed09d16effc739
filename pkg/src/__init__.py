# Ring K0 - exact K0, Pic, Cl, B and H0 computations
