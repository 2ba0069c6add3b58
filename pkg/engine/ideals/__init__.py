"""One-sided ideals, direct sums and projectors."""
