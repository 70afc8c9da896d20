# Command-line views: command implementations and the sweep harness
