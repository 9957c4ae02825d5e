from django.dispatch import Signal

# Sent with ``description``
analysis_started = Signal()
# Sent with ``witness`` for every bound a report records
bound_recorded = Signal()
# Sent with ``report``
analysis_finished = Signal()
