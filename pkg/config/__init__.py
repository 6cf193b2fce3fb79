"""Size guards, environment overrides and run configuration."""
