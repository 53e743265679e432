"""rotorwalk - recurrence and transience of rotor-router walks on directed covers"""

__version__ = "1.0.0"
