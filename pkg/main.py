import sys

import click
from flask.cli import FlaskGroup

from mps import create_app

EX_USAGE = 64
EX_IOERR = 74

cli = FlaskGroup(
    name="mps",
    create_app=create_app,
    add_default_commands=False,
    add_version_option=False,
    help="Hermite 酉 MPS 矩阵：构造、参数化、设计与实情形搜索",
)


def main(argv=None):
    """运行命令并返回退出码：用法错误 64，文件错误 74"""
    try:
        code = cli.main(args=argv, prog_name="mps", standalone_mode=False)
    except click.UsageError as exc:
        exc.show()
        return EX_USAGE
    except click.FileError as exc:
        exc.show()
        return EX_IOERR
    except click.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except OSError as exc:
        click.echo(str(exc), err=True)
        return EX_IOERR
    return code if isinstance(code, int) else 0


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
