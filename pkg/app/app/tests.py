from django.conf import settings
from django.db import connections
from django.test import SimpleTestCase

from report.config import CONFIG_KEYS
from report.serializers import AnalysisConfigSerializer


class SettingsTests(SimpleTestCase):

    def test_analysis_defaults_validate(self):
        serializer = AnalysisConfigSerializer(data=dict(settings.KEYCLASS))

        self.assertTrue(serializer.is_valid(), serializer.errors)

    def test_only_known_keys(self):
        self.assertLessEqual(set(settings.KEYCLASS), CONFIG_KEYS)

    def test_analysis_apps_installed(self):
        for app in ('core', 'gain', 'extractor', 'metrics', 'ranking',
                    'smells', 'report'):
            self.assertIn(app, settings.INSTALLED_APPS)

    def test_no_database_or_auth(self):
        """Test nothing in the project needs a database."""
        self.assertEqual(connections['default'].settings_dict['ENGINE'],
                         'django.db.backends.dummy')
        self.assertNotIn('django.contrib.auth', settings.INSTALLED_APPS)

    def test_logging_to_console(self):
        self.assertEqual(settings.LOGGING['root']['handlers'], ['console'])
