"""Family registry, back-substitution pipeline, identities and the published solutions."""
