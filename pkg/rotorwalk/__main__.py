"""python -m rotorwalk"""
import sys

from rotorwalk.main import main

sys.exit(main())
