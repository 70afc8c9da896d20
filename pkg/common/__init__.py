# Shared errors, settings, logging and file helpers
