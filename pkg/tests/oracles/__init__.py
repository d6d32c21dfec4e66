"""Independent reimplementations of key quantities, used as test oracles."""
