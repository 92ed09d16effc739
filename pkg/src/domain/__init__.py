# Domain layer - algebra without I/O
