from django.apps import AppConfig


class StokesQuiverConfig(AppConfig):
    name = 'app'
    verbose_name = 'Stokes multipliers and quivers'
