from django.apps import AppConfig


class ResetMachineConfig(AppConfig):

    name = 'reset_machine'
    verbose_name = 'Reset machine steady quantumness'
