CONFIG_FILE = "config/fairdice.conf"
TOOL_VERSION = "1.0.0"

SEED_ENV = "FAIRDICE_SEED"
CONFIG_ENV = "FAIRDICE_CONF"

# Float-mode tolerance for a die's weights summing to 1
FLOAT_SUM_TOL = 1e-12
