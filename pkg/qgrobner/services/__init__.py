# Services package for quantum-space constructions and certification
