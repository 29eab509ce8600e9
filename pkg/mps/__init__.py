from flask import Flask

from config import Config


def create_app(config_class=Config):
    app = Flask(__name__)
    app.config.from_object(config_class)
    app.logger.setLevel(app.config["LOG_LEVEL"])

    from mps.commands import bp
    from mps.commands.designs import designs
    from mps.commands.param import param

    app.register_blueprint(bp)
    app.register_blueprint(param)
    app.register_blueprint(designs)

    return app
