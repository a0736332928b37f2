from django.apps import AppConfig


class ApproximationsConfig(AppConfig):
    name = 'approximations'
    verbose_name = 'Soft covering approximations'
