"""Domain entities: immutable values passed between services."""
