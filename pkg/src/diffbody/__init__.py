"""Mixed volumes, higher-order difference bodies and anti-blocking decompositions in exact arithmetic."""
