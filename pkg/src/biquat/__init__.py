"""Quaternion and biquaternion algebras over fields of characteristic 2."""

__version__ = "0.1.0"
