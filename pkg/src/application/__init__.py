# Application layer - CLI and verification suites
