import pytest

from core import ScalarMode, InvalidInputError
from meta import Conf
from settings import RunSettings, UserInputError, sides, dice_count, parse_flag
from modules.optimizer import OptimizerSettings, OptimizerConfig
from utils.lib import parse_groups, parse_ranges, parse_timestamp, tabulate_rows


@pytest.fixture
def conf_file(tmp_path):
    path = tmp_path / "fairdice.conf"
    path.write_text(
        "[DEFAULT]\n"
        "seed = 42\n"
        "mode = float\n"
        "\n"
        "[OPTIMIZER]\n"
        "starts = 7\n"
        "step = 0.25\n"
        "workers = auto\n"
    )
    return path


class TestConf:
    def test_missing_file_is_empty(self, tmp_path):
        conf = Conf(str(tmp_path / "absent.conf"))
        assert conf.get('seed') is None
        assert conf.get_in('OPTIMIZER', 'starts', 5) == 5

    def test_sections_read_through(self, conf_file):
        conf = Conf(str(conf_file))
        assert conf.get('seed') == '42'
        assert conf.get_in('OPTIMIZER', 'starts') == '7'
        assert conf.get_in('OPTIMIZER', 'seed') == '42'
        assert conf.get_in('OUTPUT', 'seed') == '42'

    def test_also_read(self, tmp_path):
        extra = tmp_path / "extra.conf"
        extra.write_text("[OUTPUT]\nindent = 4\n")
        main = tmp_path / "main.conf"
        main.write_text("[DEFAULT]\nALSO_READ = {}\n".format(extra))
        conf = Conf(str(main))
        assert RunSettings(conf).indent.value == 4


class TestRunSettings:
    def test_defaults(self, tmp_path):
        settings = RunSettings(Conf(str(tmp_path / "absent.conf")))
        assert settings.seed.value == 0
        assert settings.seed.source == 'default'
        assert settings.mode.value is None
        assert settings.decimal_digits.value == 12
        assert settings.indent.value == 2

    def test_config_then_override(self, conf_file):
        conf = Conf(str(conf_file))
        settings = RunSettings(conf)
        assert settings.seed.value == 42
        assert settings.seed.source == 'config'
        assert settings.mode.value is ScalarMode.FLOAT

        settings = RunSettings(conf, seed='3', mode='rational')
        assert settings.seed.value == 3
        assert settings.seed.source == 'flag'
        assert settings.mode.value is ScalarMode.RATIONAL

    def test_bad_config_value(self, tmp_path):
        path = tmp_path / "bad.conf"
        path.write_text("[DEFAULT]\nseed = many\n")
        with pytest.raises(UserInputError, match="configuration"):
            RunSettings(Conf(str(path))).seed

    def test_bad_override(self, tmp_path):
        with pytest.raises(UserInputError, match="--seed"):
            RunSettings(Conf(str(tmp_path / "absent.conf")), seed='-1').seed


class TestOptimizerSettings:
    def test_precedence(self, conf_file):
        settings = OptimizerSettings(Conf(str(conf_file)), starts='11')
        cfg = settings.config(seed=8)
        assert cfg.starts == 11
        assert cfg.step == 0.25
        assert cfg.max_iters == OptimizerConfig().max_iters
        assert cfg.workers >= 1
        assert cfg.seed == 8
        assert "(flag)" in settings.tabulated()

    def test_rejects_out_of_range(self, tmp_path):
        settings = OptimizerSettings(Conf(str(tmp_path / "absent.conf")), armijo_beta='1.5')
        with pytest.raises(UserInputError):
            settings.config(seed=0)


class TestFlags:
    def test_parse_flag(self):
        assert parse_flag(sides, '6') == 6
        assert parse_flag(dice_count, ' 3 ') == 3

    def test_missing_flag(self):
        with pytest.raises(UserInputError, match="Missing required flag `--n`"):
            parse_flag(sides, None)

    @pytest.mark.parametrize("userstr", ['1', 'six', '2.5'])
    def test_bad_sides(self, userstr):
        with pytest.raises(UserInputError):
            parse_flag(sides, userstr)


class TestLib:
    def test_parse_groups(self):
        assert parse_groups("1,2;3,4") == [[1, 2], [3, 4]]
        assert parse_groups("1-2; 3-4;") == [[1, 2], [3, 4]]
        with pytest.raises(InvalidInputError):
            parse_groups("1,2;;3")
        with pytest.raises(InvalidInputError):
            parse_groups("1,x")

    def test_parse_ranges(self):
        assert parse_ranges("1, 5, 6-9") == [1, 5, 6, 7, 8, 9]

    def test_parse_timestamp(self):
        stamp = parse_timestamp("2024-03-01T12:30:00+02:00")
        assert stamp.hour == 10
        assert parse_timestamp("yesterday") is None
        assert parse_timestamp(None) is None

    def test_tabulate_rows(self):
        assert tabulate_rows(("j", "c_j"), [(2, "1/4")]).splitlines() == ["j  c_j", "-  ---", "2  1/4"]
