"""HTTP API surface and the JSON document schemas it shares with the command line."""
