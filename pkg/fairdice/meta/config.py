import os
import configparser as cfgp

from constants import CONFIG_FILE, CONFIG_ENV

from .logger import log


class Conf:
    """
    Configuration file reader.

    Sections used by the application are `DEFAULT`, `OPTIMIZER` and `OUTPUT`;
    a section that is absent reads through to `DEFAULT`, and a missing file is an empty configuration.
    Files listed in `ALSO_READ` are read after the main file, relative paths resolving against
    the directory of the file that names them.
    """
    def __init__(self, configfile=None, section_name="DEFAULT"):
        self.load(configfile, section_name)

    def load(self, configfile, section_name="DEFAULT"):
        self.configfile = configfile
        self.config = cfgp.ConfigParser(converters={"list": self._getlist})
        self.files_read = self._read(configfile) if configfile else []

        self.section_name = section_name if section_name in self.config else 'DEFAULT'
        self.section = self.config[self.section_name]
        if self.files_read:
            log("Read configuration from {}.".format(", ".join(self.files_read)), context="CONFIG")

    def _read(self, configfile):
        queue = [os.path.abspath(configfile)]
        seen = set()
        read = []
        while queue:
            path = queue.pop(0)
            if path in seen:
                continue
            seen.add(path)
            read.extend(self.config.read(path))
            base = os.path.dirname(path)
            for extra in self.config['DEFAULT'].getlist("ALSO_READ", []):
                if extra:
                    queue.append(os.path.normpath(os.path.join(base, extra)))
        return read

    def __getitem__(self, key):
        return self.section[key].strip()

    def __getattr__(self, section):
        config = self.__dict__.get('config')
        if config is None:
            raise AttributeError(section)
        return config[section] if section in config else config['DEFAULT']

    def get(self, name, fallback=None):
        return self._clean(self.section.get(name, fallback))

    def get_in(self, section, name, fallback=None):
        """
        Read `name` from the given section, reading through to `DEFAULT`.
        """
        return self._clean(getattr(self, section).get(name, fallback))

    @staticmethod
    def _clean(value):
        return value.strip() if isinstance(value, str) else value

    @staticmethod
    def _getlist(value):
        return [item.strip() for item in value.split(',')]


def default_config_path():
    """
    Configuration path from the environment, or the default constant.
    """
    return os.environ.get(CONFIG_ENV, CONFIG_FILE)


conf = Conf(default_config_path())
