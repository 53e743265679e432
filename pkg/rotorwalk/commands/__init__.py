"""Command-line subcommands, one module per group"""
