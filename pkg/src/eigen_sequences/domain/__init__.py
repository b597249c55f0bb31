"""Domain layer: exact sequence transforms and their fixed points."""
