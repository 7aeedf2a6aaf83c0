"""
Edge Sched Simulator
====================
Command-line front end for the edge-sched library.
"""

__version__ = "0.1.0"
