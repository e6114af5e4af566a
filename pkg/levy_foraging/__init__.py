"""The levy_foraging command-line tool."""
