from core.errors import InvalidInputError
from utils.lib import prop_tabulate, DotDict


class UserInputError(InvalidInputError):
    """
    A flag or configuration value couldn't be parsed.
    The `msg` is shown to the user verbatim.
    """
    pass


class Setting:
    """
    A single run parameter.

    Subclasses combine a `SettingType` mixin, which converts between user strings, internal data
    and values, with the attributes below naming where the parameter lives and how it is described.
    The data is `None` when unset, and then `default` applies.
    """
    attr_name: str = None  # Flag dest and configuration key
    section: str = "DEFAULT"  # Configuration section holding the key
    _default: ... = None

    display_name: str = None
    desc: str = None
    accepts: str = None

    def __init__(self, data: ..., source: str = 'default'):
        self._data = data
        self.source = source

    @classmethod
    def _flag_name(cls):
        return "--" + cls.attr_name.replace('_', '-')

    @classmethod
    def get(cls, conf):
        """
        Instance read from the configuration, unset if the key is absent or blank.
        """
        userstr = conf.get_in(cls.section, cls.attr_name) if conf is not None else None
        if not userstr:
            return cls(None)
        try:
            return cls(cls._parse_userstr(userstr), source='config')
        except UserInputError as e:
            raise UserInputError("Invalid value for `{}` in section [{}] of the configuration: {}".format(
                cls.attr_name, cls.section, e.msg
            )) from None

    @classmethod
    def parse(cls, userstr: str):
        """
        Instance parsed from a command line flag.
        """
        try:
            return cls(cls._parse_userstr(userstr), source='flag')
        except UserInputError as e:
            raise UserInputError("Invalid value for `{}`: {}".format(cls._flag_name(), e.msg)) from None

    @property
    def data(self):
        return self.default if self._data is None else self._data

    @property
    def default(self):
        return self._default

    @property
    def value(self):
        return self._data_to_value(self.data)

    @property
    def formatted(self):
        return self._format_data(self.data)

    # Supplied by the SettingType mixin
    @classmethod
    def _data_to_value(cls, data: ...):
        raise NotImplementedError

    @classmethod
    def _parse_userstr(cls, userstr: str):
        raise NotImplementedError

    @classmethod
    def _format_data(cls, data: ...):
        raise NotImplementedError


class ObjectSettings:
    """
    A family of settings resolved together.

    Each attached setting becomes a property resolving, in order, an explicit override
    (usually a command flag), the configuration, and the setting default.
    Subclasses declare their own `settings = DotDict()` registry.
    """
    __slots__ = ('conf', 'overrides')

    settings: DotDict = None

    def __init__(self, conf=None, **overrides):
        self.conf = conf
        self.overrides = {key: value for key, value in overrides.items() if value is not None}

    @classmethod
    def attach_setting(cls, setting):
        name = setting.attr_name or setting.__name__

        def resolve(self):
            if name in self.overrides:
                return setting.parse(str(self.overrides[name]))
            return setting.get(self.conf)

        setattr(cls, name, property(resolve))
        cls.settings[name] = setting
        return setting

    def values(self):
        """
        Resolved values keyed by setting name.
        """
        return {name: getattr(self, name).value for name in self.settings}

    def tabulated(self):
        """
        Table of every setting with its value and where the value came from.
        """
        names, shown = [], []
        for name, setting in self.settings.items():
            resolved = getattr(self, name)
            names.append(setting.display_name)
            shown.append("{} ({})".format(resolved.formatted, resolved.source))
        return prop_tabulate(names, shown)
