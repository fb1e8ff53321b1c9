from .config import Config, default_config, build_run_config, check_run_config, parse_options

__all__ = ['Config', 'default_config', 'build_run_config', 'check_run_config', 'parse_options']
