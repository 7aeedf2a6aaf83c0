"""Edge Sched Simulator - core settings, logging and errors."""
