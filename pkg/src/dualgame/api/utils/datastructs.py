from typing import List

import warnings


# string constants
def strconstants(cls=None, supress_warnings=False):
    """
    Decorator to create static string constants class.
    Unknown fields are returned as is, with a warning unless supress_warnings is set.
    Iterating the class yields the constants in declaration order.
    """

    def wrap(cls):
        fields = [
            (k, v)
            for k, v in vars(cls).items()
            if not k.startswith("_") and isinstance(v, str)
        ]

        class StrConstantsMeta(type):
            def __getattr__(self, attr):
                if attr.startswith("__"):
                    raise AttributeError(attr)
                if not supress_warnings:
                    warnings.warn(
                        f"Field '{attr}' does not exist in '{cls.__name__}'. "
                        "Returning attribute as is.",
                        RuntimeWarning,
                        stacklevel=2,
                    )
                return attr

            def __iter__(self):
                return iter([v for _, v in fields])

            def __len__(self):
                return len(fields)

            def __contains__(self, item):
                return item in [v for _, v in fields]

        def __new__(kls, *args, **kwargs):
            raise TypeError(
                f"Instances of static class '{cls.__name__}' cannot be created."
            )

        namespace = dict(fields)
        namespace["__doc__"] = cls.__doc__
        namespace["__new__"] = __new__
        namespace["__module__"] = cls.__module__
        return StrConstantsMeta(cls.__name__, (), namespace)

    # decorator is called with parentheses
    if cls is None:
        return wrap
    return wrap(cls)


# constants as list
def get_constants(cls) -> List[str]:
    """
    Get values of string constants class in declaration order
    """
    return list(iter(cls))
